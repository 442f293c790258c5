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
#include "core/bfile.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace permscan {

namespace {

ParseError line_error(uint64_t no, const std::string& what) {
  return ParseError("b-file line " + std::to_string(no) + ": " + what);
}

}  // namespace

std::vector<BFileEntry> read_bfile(const std::string& path,
                                   uint64_t max_entries) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<BFileEntry> entries;
  std::string line;
  uint64_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;

    size_t sep = line.find_first_of(" \t", start);
    if (sep == std::string::npos)
      throw line_error(no, "expected '<index> <value>'");
    size_t vstart = line.find_first_not_of(" \t", sep);
    if (vstart == std::string::npos)
      throw line_error(no, "missing value");
    size_t vend = line.find_first_of(" \t", vstart);
    if (vend == std::string::npos) vend = line.size();
    if (line.find_first_not_of(" \t", vend) != std::string::npos)
      throw line_error(no, "trailing content");

    BFileEntry e;
    const char* ib = line.data() + start;
    const char* ie = line.data() + sep;
    auto [p, ec] = std::from_chars(ib, ie, e.index);
    if (ec != std::errc() || p != ie)
      throw line_error(no, "bad index");
    e.value = line.substr(vstart, vend - vstart);
    for (char c : e.value)
      if (c < '0' || c > '9')
        throw line_error(no, "bad value");
    if (e.value.size() > 1 && e.value[0] == '0')
      throw line_error(no, "value has a leading zero");
    entries.push_back(std::move(e));
    if (max_entries && entries.size() >= max_entries) break;
  }
  return entries;
}

CompareResult compare_prefix(SeqKind kind,
                             const std::vector<BFileEntry>& entries,
                             uint64_t count) {
  if (count == 0) throw std::domain_error("count must be positive");
  if (entries.size() < count)
    throw std::invalid_argument("b-file has " +
                                std::to_string(entries.size()) +
                                " entries but " + std::to_string(count) +
                                " were requested");
  SequenceStream stream(kind);
  CompareResult r;
  for (uint64_t i = 0; i < count; ++i) {
    if (entries[i].index != i + 1)
      throw std::invalid_argument(
          "b-file indices must run 1, 2, 3, ...; entry " + std::to_string(i) +
          " has index " + std::to_string(entries[i].index));
    std::string got = stream.next();
    if (got != entries[i].value) {
      r.ok = false;
      r.compared = i;
      r.mismatch_index = entries[i].index;
      r.file_value = entries[i].value;
      r.generated_value = got;
      return r;
    }
  }
  r.ok = true;
  r.compared = count;
  return r;
}

CompareResult compare_bfile(SeqKind kind, const std::string& path,
                            uint64_t count) {
  return compare_prefix(kind, read_bfile(path, count), count);
}

}  // namespace permscan
