/*
 * Copyright 2026 The permscan authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permscan {

// Error taxonomy used across the library:
//   std::invalid_argument  malformed input (bad decimal string, null handle)
//   std::domain_error      argument outside an operation's domain
//   std::overflow_error    result does not fit the requested width
//   BudgetExceeded         scan refused because the root range is too large
//   ParseError             structured file content rejected
//   CheckpointParseError   checkpoint rejected, with the offending line
//   IoError                file could not be opened, read, or replaced

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(uint64_t required, uint64_t budget)
      : std::runtime_error("root range needs " + std::to_string(required) +
                           " bases but the budget is " + std::to_string(budget) +
                           "; raise the budget or scan sub-ranges"),
        required_(required),
        budget_(budget) {}
  uint64_t required_bases() const { return required_; }
  uint64_t budget() const { return budget_; }

 private:
  uint64_t required_;
  uint64_t budget_;
};

class CheckpointParseError : public ParseError {
 public:
  CheckpointParseError(int line, const std::string& what)
      : ParseError("checkpoint line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permscan
