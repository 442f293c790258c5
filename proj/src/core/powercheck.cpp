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

#include <array>
#include <cassert>
#include <stdexcept>

namespace permscan {

namespace detail {

std::vector<uint32_t> primes_upto(uint32_t n) {
  std::vector<uint32_t> primes;
  if (n < 2) return primes;
  std::vector<uint8_t> composite(n + 1, 0);
  for (uint32_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (uint64_t q = uint64_t{p} * p; q <= n; q += p) composite[q] = 1;
  }
  return primes;
}

namespace {

template <unsigned M>
std::array<bool, M> residue_table() {
  std::array<bool, M> t{};
  for (unsigned r = 0; r < M; ++r) t[(r * r) % M] = true;
  return t;
}

const std::array<bool, 64> kSquareMod64 = residue_table<64>();
const std::array<bool, 63> kSquareMod63 = residue_table<63>();

}  // namespace

bool square_residue_ok(const Natural& x) {
  // mod 64 eliminates 52/64 residues, mod 63 another 47/63.
  if (!kSquareMod64[x.mod_u64(64)]) return false;
  if (!kSquareMod63[x.mod_u64(63)]) return false;
  return true;
}

}  // namespace detail

RootResult integer_nth_root(const Natural& x, uint32_t k) {
  if (k == 0) throw std::domain_error("root index must be positive");
  if (x.is_zero()) return {Natural(0), true};
  if (k == 1) return {x, true};

  uint64_t bits = x.bit_length();
  // 2^ceil(bits/k) is always an upper bound for x^(1/k).
  uint64_t seed_bits = (bits + k - 1) / k;
  Natural r = Natural::pow(Natural(2), seed_bits);

  // Newton steps decrease monotonically once above the root.
  while (true) {
    Natural rk1 = Natural::pow(r, k - 1);
    Natural next = (Natural(k - 1) * r + x / rk1) / Natural(k);
    if (next >= r) break;
    r = std::move(next);
  }
  // The loop can stop one above the floor; correct downward.
  while (Natural::pow(r, k) > x) r -= 1;
  assert(Natural::pow(r, k) <= x && Natural::pow(r + Natural(1), k) > x);
  bool exact = (Natural::pow(r, k) == x);
  return {std::move(r), exact};
}

std::optional<Natural> perfect_square_root(const Natural& x) {
  if (!detail::square_residue_ok(x)) return std::nullopt;
  RootResult rr = integer_nth_root(x, 2);
  if (!rr.exact) return std::nullopt;
  return std::move(rr.root);
}

bool is_perfect_square(const Natural& x) {
  return perfect_square_root(x).has_value();
}

std::optional<PowerWitness> perfect_power_decompose(const Natural& x) {
  if (x < Natural(2)) throw std::domain_error("decomposition needs x >= 2");
  // If x = b^n with n maximal, every prime factor p of n gives an exact
  // p-th root, and n <= bit_length(x) because b >= 2. Recursing on the
  // first exact root accumulates the full exponent.
  uint64_t bits = x.bit_length();
  std::vector<uint32_t> primes =
      detail::primes_upto(static_cast<uint32_t>(bits));
  for (uint32_t p : primes) {
    if (p == 2 && !detail::square_residue_ok(x)) continue;
    RootResult rr = integer_nth_root(x, p);
    if (!rr.exact) continue;
    // rr.root >= 2 here, since x >= 2 and the root is exact.
    auto sub = perfect_power_decompose(rr.root);
    if (sub) return PowerWitness{std::move(sub->base), sub->exponent * p};
    return PowerWitness{std::move(rr.root), p};
  }
  return std::nullopt;
}

bool is_perfect_power(const Natural& x) {
  return perfect_power_decompose(x).has_value();
}

}  // namespace permscan
