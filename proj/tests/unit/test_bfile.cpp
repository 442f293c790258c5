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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "doctest.h"

using namespace permscan;
namespace fs = std::filesystem;

namespace {

const std::string kData = PERMSCAN_TEST_DATA;

struct TempFile {
  fs::path path;
  explicit TempFile(const char* stem) {
    path = fs::temp_directory_path() /
           (std::string(stem) + "." + std::to_string(::getpid()) + ".txt");
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
  void fill(const std::string& content) const {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    out << content;
  }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_SUITE("bfile") {

TEST_CASE("reads the fixture, skipping comments") {
  auto entries = read_bfile(kData + "/b352991_head.txt");
  REQUIRE(entries.size() == 15);
  CHECK(entries[0].index == 1);
  CHECK(entries[0].value == "1");
  CHECK(entries[9].index == 10);
  CHECK(entries[9].value == "1234");
  CHECK(entries[14].value == "1432");

  auto capped = read_bfile(kData + "/b352991_head.txt", 4);
  CHECK(capped.size() == 4);
}

TEST_CASE("matching prefixes compare clean") {
  CompareResult r = compare_bfile(SeqKind::a352991,
                                  kData + "/b352991_head.txt", 15);
  CHECK(r.ok);
  CHECK(r.compared == 15);

  r = compare_bfile(SeqKind::a001292, kData + "/b001292_head.txt", 15);
  CHECK(r.ok);

  r = compare_bfile(SeqKind::a352991, kData + "/b352991_head.txt", 10);
  CHECK(r.ok);
  CHECK(r.compared == 10);
}

TEST_CASE("a mismatch reports index and both values") {
  CompareResult r = compare_bfile(SeqKind::a352991,
                                  kData + "/b352991_bad.txt", 15);
  CHECK_FALSE(r.ok);
  CHECK(r.mismatch_index == 13);
  CHECK(r.file_value == "1343");
  CHECK(r.generated_value == "1342");
}

TEST_CASE("generated b-file for the concatenation sequence") {
  // Build the expected file by plain string appends, then compare.
  TempFile f("b007908");
  std::string content = "# header\n";
  std::string acc;
  for (int i = 1; i <= 12; ++i) {
    acc += std::to_string(i);
    content += std::to_string(i) + " " + acc + "\n";
  }
  f.fill(content);
  CompareResult r = compare_bfile(SeqKind::a007908, f.str(), 12);
  CHECK(r.ok);
}

TEST_CASE("crlf and blank lines are tolerated") {
  TempFile f("crlf");
  f.fill("# c\r\n\r\n1 1\r\n2 12\r\n3 21\r\n");
  auto entries = read_bfile(f.str());
  REQUIRE(entries.size() == 3);
  CHECK(entries[2].value == "21");
  CHECK(compare_bfile(SeqKind::a352991, f.str(), 3).ok);
}

TEST_CASE("syntax errors name the line") {
  TempFile f("bad");

  f.fill("1\n");
  CHECK_THROWS_AS(read_bfile(f.str()), ParseError);

  f.fill("x 12\n");
  try {
    read_bfile(f.str());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }

  f.fill("# ok\n1 1\n2 012\n");
  try {
    read_bfile(f.str());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  f.fill("1 1 junk\n");
  CHECK_THROWS_AS(read_bfile(f.str()), ParseError);

  CHECK_THROWS_AS(read_bfile("/nonexistent/b.txt"), IoError);
}

TEST_CASE("comparison argument checks") {
  std::vector<BFileEntry> entries = {{1, "1"}, {2, "12"}};
  CHECK_THROWS_AS(compare_prefix(SeqKind::a352991, entries, 0),
                  std::domain_error);
  CHECK_THROWS_AS(compare_prefix(SeqKind::a352991, entries, 5),
                  std::invalid_argument);
  std::vector<BFileEntry> gap = {{1, "1"}, {3, "21"}};
  CHECK_THROWS_AS(compare_prefix(SeqKind::a352991, gap, 2),
                  std::invalid_argument);
}

}  // TEST_SUITE
