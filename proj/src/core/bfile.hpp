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
#include <string>
#include <vector>

#include "core/sequences.hpp"

namespace permscan {

// OEIS b-file parsing and prefix comparison.
//
// A b-file line is "<index> <value>"; lines starting with '#' and blank
// lines are skipped. Entries must start at index 1 and be consecutive.

struct BFileEntry {
  uint64_t index = 0;
  std::string value;  // decimal digits
};

// Reads at most max_entries data lines (0 = all). Throws IoError when the
// file cannot be opened and ParseError naming the line number on malformed
// content.
std::vector<BFileEntry> read_bfile(const std::string& path,
                                   uint64_t max_entries = 0);

struct CompareResult {
  bool ok = false;
  uint64_t compared = 0;
  uint64_t mismatch_index = 0;  // valid when !ok
  std::string file_value;
  std::string generated_value;
};

// Compares the file entries against the first `count` generated terms.
// Throws std::invalid_argument when the file holds fewer than `count`
// entries or the indices are not 1, 2, 3, ...
CompareResult compare_prefix(SeqKind kind,
                             const std::vector<BFileEntry>& entries,
                             uint64_t count);

// Convenience wrapper: read then compare.
CompareResult compare_bfile(SeqKind kind, const std::string& path,
                            uint64_t count);

}  // namespace permscan
