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
#include "core/filters.hpp"

#include <cstdint>
#include <stdexcept>

#include "core/sequences.hpp"
#include "doctest.h"

using namespace permscan;

TEST_SUITE("filters") {

TEST_CASE("triangular_residue matches direct computation") {
  for (uint64_t m = 0; m < 200; ++m) {
    uint64_t tri = m * (m + 1) / 2;
    CHECK(triangular_residue(m) == tri % 9);
  }
  // Period 9 far from zero, where m*(m+1)/2 would overflow.
  for (uint64_t m = UINT64_MAX - 20; m != 0; ++m) {
    CHECK(triangular_residue(m) == triangular_residue(m % 9));
  }
}

TEST_CASE("triangular residue of the actual concatenation") {
  for (uint64_t m = 1; m <= 40; ++m) {
    CHECK(concat_range(m).mod_u64(9) == triangular_residue(m));
  }
}

TEST_CASE("theorem1_excludes pattern") {
  CHECK_THROWS_AS(theorem1_excludes(0), std::domain_error);
  CHECK_THROWS_AS(theorem1_excludes(1), std::domain_error);
  CHECK(theorem1_excludes(2));
  CHECK(theorem1_excludes(3));
  CHECK_FALSE(theorem1_excludes(4));
  CHECK(theorem1_excludes(5));
  CHECK(theorem1_excludes(6));
  CHECK_FALSE(theorem1_excludes(7));
  CHECK_FALSE(theorem1_excludes(8));
  CHECK_FALSE(theorem1_excludes(9));
  CHECK_FALSE(theorem1_excludes(10));
  CHECK(theorem1_excludes(447));

  int excluded = 0;
  for (uint64_t m = 2; m <= 100; ++m)
    if (theorem1_excludes(m)) ++excluded;
  CHECK(excluded == 44);
}

TEST_CASE("excluded blocks are exactly the residue 3 and 6 blocks") {
  for (uint64_t m = 2; m <= 2000; ++m) {
    unsigned r = triangular_residue(m);
    bool bad = (r == 3 || r == 6);
    CHECK(theorem1_excludes(m) == bad);
    if (!bad) {
      // The surviving residues are the ones squares can take.
      CHECK((r == 0 || r == 1));
    }
  }
}

TEST_CASE("digital_root") {
  CHECK(digital_root(Natural(0)) == 0);
  CHECK(digital_root(Natural(9)) == 9);
  CHECK(digital_root(Natural(10)) == 1);
  CHECK(digital_root(Natural(12345)) == 6);
  for (uint64_t m = 1; m <= 30; ++m) {
    unsigned r = triangular_residue(m);
    CHECK(digital_root(concat_range(m)) == (r == 0 ? 9 : r));
  }
}

TEST_CASE("remark1 trailing-digit rules") {
  // Divisible by 5: must end in 00, 25, or 75.
  CHECK(remark1_passes(Natural(25)));
  CHECK(remark1_passes(Natural(100)));
  CHECK(remark1_passes(Natural(2475)));
  CHECK_FALSE(remark1_passes(Natural(250)));
  CHECK_FALSE(remark1_passes(Natural(115)));
  CHECK_FALSE(remark1_passes(Natural(5)));
  // Ending in 6: tens digit must be odd.
  CHECK(remark1_passes(Natural(16)));
  CHECK(remark1_passes(Natural(36)));
  CHECK(remark1_passes(Natural(196)));
  CHECK_FALSE(remark1_passes(Natural(106)));
  CHECK_FALSE(remark1_passes(Natural(66)));
  // Everything else is untouched.
  CHECK(remark1_passes(Natural(4)));
  CHECK(remark1_passes(Natural(1234)));
}

TEST_CASE("remark1 never rejects an actual power") {
  for (uint64_t b = 1; b <= 300; ++b) {
    for (uint32_t k = 2; k <= 6; ++k) {
      CHECK(remark1_passes(Natural::pow(Natural(b), k)));
    }
  }
}

TEST_CASE("candidate_filter ordering and reasons") {
  CHECK_THROWS_AS(candidate_filter(Natural(12), 1), std::domain_error);

  // Non-excluded block, passes everything.
  FilterVerdict v = candidate_filter(Natural::from_decimal("1234"), 4);
  CHECK_FALSE(v.excluded);
  CHECK(v.reason == FilterReason::none);

  // 1345726 spells the tokens 1,3,4,5,7,2,6: block 7 survives the sieve
  // but the value ends in 26, an even tens digit before a 6.
  v = candidate_filter(Natural::from_decimal("1345726"), 7);
  CHECK(v.excluded);
  CHECK(v.reason == FilterReason::trailing);

  // 134526 has the same bad tail but sits in block 6; the sieve wins.
  v = candidate_filter(Natural::from_decimal("134526"), 6);
  CHECK(v.excluded);
  CHECK(v.reason == FilterReason::mod9);
}

}  // TEST_SUITE
