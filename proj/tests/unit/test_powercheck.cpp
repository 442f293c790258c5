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
#include "core/powercheck.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "core/natural.hpp"
#include "doctest.h"

using namespace permscan;

namespace {

// Random decimal string with exactly `digits` digits.
std::string random_decimal(std::mt19937_64& rng, uint32_t digits) {
  std::uniform_int_distribution<int> lead(1, 9);
  std::uniform_int_distribution<int> any(0, 9);
  std::string s;
  s.reserve(digits);
  s.push_back(static_cast<char>('0' + lead(rng)));
  for (uint32_t i = 1; i < digits; ++i)
    s.push_back(static_cast<char>('0' + any(rng)));
  return s;
}

}  // namespace

TEST_SUITE("powercheck") {

TEST_CASE("nth root edge cases") {
  CHECK_THROWS_AS(integer_nth_root(Natural(5), 0), std::domain_error);
  RootResult r = integer_nth_root(Natural(0), 7);
  CHECK(r.root == Natural(0));
  CHECK(r.exact);
  r = integer_nth_root(Natural(12345), 1);
  CHECK(r.root == Natural(12345));
  CHECK(r.exact);
  r = integer_nth_root(Natural(1), 99);
  CHECK(r.root == Natural(1));
  CHECK(r.exact);
}

TEST_CASE("nth root by running oracle") {
  // For fixed k, march x upward and bump the root whenever (r+1)^k
  // is reached. Never calls the code under test to advance.
  for (uint32_t k = 2; k <= 12; ++k) {
    uint64_t r = 0;
    Natural next = Natural::pow(Natural(1), k);  // 1^k
    for (uint64_t x = 0; x <= 20000; ++x) {
      if (Natural(x) >= next) {
        ++r;
        next = Natural::pow(Natural(r + 1), k);
      }
      RootResult got = integer_nth_root(Natural(x), k);
      CHECK(got.root == Natural(r));
      CHECK(got.exact == (Natural::pow(Natural(r), k) == Natural(x)));
    }
  }
}

TEST_CASE("nth root at power boundaries") {
  const char* bases[] = {"2", "3", "10", "999", "12345678901234567890"};
  for (const char* bs : bases) {
    Natural b = Natural::from_decimal(bs);
    for (uint32_t k : {2u, 3u, 5u, 17u}) {
      Natural p = Natural::pow(b, k);
      RootResult at = integer_nth_root(p, k);
      CHECK(at.root == b);
      CHECK(at.exact);
      RootResult below = integer_nth_root(p - Natural(1), k);
      CHECK(below.root == b - Natural(1));
      CHECK_FALSE(below.exact);
      RootResult above = integer_nth_root(p + Natural(1), k);
      CHECK(above.root == b);
      CHECK_FALSE(above.exact);
    }
  }
}

TEST_CASE("nth root sandwich on random big inputs") {
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<uint32_t> dpick(1, 400);
  std::uniform_int_distribution<uint32_t> kpick(2, 40);
  for (int i = 0; i < 300; ++i) {
    Natural x = Natural::from_decimal(random_decimal(rng, dpick(rng)));
    uint32_t k = kpick(rng);
    RootResult r = integer_nth_root(x, k);
    CHECK(Natural::pow(r.root, k) <= x);
    CHECK(Natural::pow(r.root + Natural(1), k) > x);
    CHECK(r.exact == (Natural::pow(r.root, k) == x));
  }
}

TEST_CASE("perfect squares by exhaustive sweep") {
  uint64_t root = 0;
  for (uint64_t x = 0; x <= 100000; ++x) {
    while ((root + 1) * (root + 1) <= x) ++root;
    bool square = root * root == x;
    CHECK(is_perfect_square(Natural(x)) == square);
    auto sr = perfect_square_root(Natural(x));
    CHECK(sr.has_value() == square);
    if (square) CHECK(*sr == Natural(root));
  }
}

TEST_CASE("residue pretest never rejects a square") {
  for (uint64_t r = 0; r <= 3000; ++r)
    CHECK(detail::square_residue_ok(Natural(r * r)));
}

TEST_CASE("perfect power decomposition picks the maximal exponent") {
  CHECK_THROWS_AS(perfect_power_decompose(Natural(0)), std::domain_error);
  CHECK_THROWS_AS(perfect_power_decompose(Natural(1)), std::domain_error);

  auto w = perfect_power_decompose(Natural(1024));
  REQUIRE(w.has_value());
  CHECK(w->base == Natural(2));
  CHECK(w->exponent == 10);

  w = perfect_power_decompose(Natural(46656));  // 6^6 = 36^3 = 216^2
  REQUIRE(w.has_value());
  CHECK(w->base == Natural(6));
  CHECK(w->exponent == 6);

  w = perfect_power_decompose(Natural(36));
  REQUIRE(w.has_value());
  CHECK(w->base == Natural(6));
  CHECK(w->exponent == 2);

  CHECK_FALSE(perfect_power_decompose(Natural(12)).has_value());
  CHECK_FALSE(perfect_power_decompose(Natural(2)).has_value());

  w = perfect_power_decompose(Natural::pow(Natural(2), 64));
  REQUIRE(w.has_value());
  CHECK(w->base == Natural(2));
  CHECK(w->exponent == 64);

  w = perfect_power_decompose(Natural::pow10(100));
  REQUIRE(w.has_value());
  CHECK(w->base == Natural(10));
  CHECK(w->exponent == 100);

  // The base of the decomposition is itself power-free.
  w = perfect_power_decompose(Natural::pow(Natural(12), 6));
  REQUIRE(w.has_value());
  CHECK(w->base == Natural(12));
  CHECK(w->exponent == 6);
}

TEST_CASE("perfect power against exhaustive table") {
  // Mark every proper power up to the bound, then compare point by point.
  const uint64_t bound = 60000;
  std::vector<bool> is_power(bound + 1, false);
  for (uint64_t b = 2; b * b <= bound; ++b) {
    uint64_t p = b * b;
    while (p <= bound) {
      is_power[p] = true;
      if (p > bound / b) break;
      p *= b;
    }
  }
  for (uint64_t x = 2; x <= bound; ++x)
    CHECK(is_perfect_power(Natural(x)) == is_power[x]);
}

TEST_CASE("decomposition round trips on big constructed powers") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<uint32_t> dpick(1, 40);
  std::uniform_int_distribution<uint32_t> kpick(2, 30);
  for (int i = 0; i < 100; ++i) {
    Natural b = Natural::from_decimal(random_decimal(rng, dpick(rng)));
    if (b < Natural(2)) continue;
    uint32_t k = kpick(rng);
    Natural x = Natural::pow(b, k);
    auto w = perfect_power_decompose(x);
    REQUIRE(w.has_value());
    CHECK(w->exponent % k == 0);  // maximal exponent is a multiple
    CHECK(Natural::pow(w->base, w->exponent) == x);
  }
}

TEST_CASE("primes_upto") {
  auto p = detail::primes_upto(100);
  std::vector<uint32_t> want = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                73, 79, 83, 89, 97};
  CHECK(p == want);
  CHECK(detail::primes_upto(1).empty());
  CHECK(detail::primes_upto(2) == std::vector<uint32_t>{2});
}

}  // TEST_SUITE
