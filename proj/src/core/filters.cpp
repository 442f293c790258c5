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

#include <stdexcept>

namespace permscan {

unsigned triangular_residue(uint64_t m) {
  uint64_t r = m % 9;
  // 2 is invertible mod 9, so the residue only depends on m mod 9.
  static constexpr unsigned table[9] = {0, 1, 3, 6, 1, 6, 3, 1, 0};
  return table[r];
}

bool theorem1_excludes(uint64_t m) {
  if (m < 2) throw std::domain_error("sieve applies to blocks m >= 2");
  unsigned r = triangular_residue(m);
  return r == 3 || r == 6;
}

unsigned digital_root(const Natural& x) {
  if (x.is_zero()) return 0;
  unsigned r = static_cast<unsigned>(x.mod_u64(9));
  return r == 0 ? 9 : r;
}

bool remark1_passes(const Natural& x) {
  unsigned r100 = static_cast<unsigned>(x.mod_u64(100));
  unsigned last = r100 % 10;
  if (last == 0 || last == 5)
    return r100 == 0 || r100 == 25 || r100 == 75;
  if (last == 6) return (r100 / 10) % 2 == 1;
  return true;
}

FilterVerdict candidate_filter(const Natural& x, uint64_t m) {
  if (theorem1_excludes(m)) return {true, FilterReason::mod9};
  if (!remark1_passes(x)) return {true, FilterReason::trailing};
  return {false, FilterReason::none};
}

}  // namespace permscan
