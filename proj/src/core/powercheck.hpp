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
#include <optional>
#include <vector>

#include "core/natural.hpp"

namespace permscan {

// Exact root extraction and perfect-power recognition.
//
// All routines are deterministic integer algorithms on top of Natural;
// nothing here calls a library root or power-detection primitive.

struct RootResult {
  Natural root;  // floor(x^(1/k))
  bool exact;    // root^k == x
};

// Newton iteration seeded from the bit length, corrected to the exact
// floor. Throws std::domain_error if k == 0.
// Postcondition: root^k <= x < (root+1)^k.
RootResult integer_nth_root(const Natural& x, uint32_t k);

// Floor square root when x is a perfect square, nullopt otherwise.
// Non-residues mod 64 and mod 63 are rejected before any root is taken.
std::optional<Natural> perfect_square_root(const Natural& x);

bool is_perfect_square(const Natural& x);

// base^exponent == x with the largest possible exponent; base itself is
// never a perfect power. nullopt when x is not b^k for any k >= 2.
// Throws std::domain_error if x < 2.
struct PowerWitness {
  Natural base;
  uint32_t exponent = 0;
};

std::optional<PowerWitness> perfect_power_decompose(const Natural& x);

bool is_perfect_power(const Natural& x);

namespace detail {

// Primes in [2, n], by sieve.
std::vector<uint32_t> primes_upto(uint32_t n);

// Quadratic-residue pretest used by perfect_square_root.
bool square_residue_ok(const Natural& x);

}  // namespace detail

}  // namespace permscan
