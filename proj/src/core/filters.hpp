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

#include "core/natural.hpp"

namespace permscan {

// Congruence filters for perfect-power candidates.
//
// Every member of block m is congruent to 1 + 2 + ... + m (mod 9), because
// digit permutations preserve the digit sum. Squares are 0, 1, 4, or 7
// (mod 9) and k-th powers never land on 3 or 6, so a block whose triangular
// residue is 3 or 6 contains no perfect power at all and can be skipped
// without enumerating it.

// (m * (m+1) / 2) mod 9, overflow safe for every uint64_t m.
unsigned triangular_residue(uint64_t m);

// True when block m is sieved out, which happens exactly for
// m = 2, 3, 5, 6 (mod 9). Throws std::domain_error if m < 2.
bool theorem1_excludes(uint64_t m);

// 1..9 for positive x, 0 for zero.
unsigned digital_root(const Natural& x);

// Trailing-digit conditions every perfect power satisfies: a power that is
// divisible by 5 ends in 00, 25, or 75, and a power ending in 6 has an odd
// tens digit. Returns false only when x cannot be a k-th power (k >= 2).
bool remark1_passes(const Natural& x);

enum class FilterReason {
  none,
  mod9,      // block sieved out by the triangular residue
  trailing,  // last two digits rule out a perfect power
};

struct FilterVerdict {
  bool excluded = false;
  FilterReason reason = FilterReason::none;
};

// Cheap checks applied to a power candidate x drawn from block m, in order
// of increasing cost. Throws std::domain_error if m < 2.
FilterVerdict candidate_filter(const Natural& x, uint64_t m);

}  // namespace permscan
