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

#include <array>
#include <cstdint>

namespace permscan {

// Density heuristics for the rotation search.

// Reduced fraction.
struct Rational {
  uint64_t num = 0;
  uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

// Probability that a token drawn from the m = 10 census ends in `digit`:
// (11 - digit) / 55 for digit >= 1, and 1/55 for digit 0.
// Throws std::domain_error if digit > 9.
Rational trailing_digit_law(unsigned digit);

// Census of the last digits of the tokens 1..m, aggregated over every block
// m <= m_max. Block m contributes the last digit of each of its m tokens,
// so the total count is m_max * (m_max + 1) / 2.
struct TailDistribution {
  std::array<uint64_t, 10> counts{};
  uint64_t total = 0;

  double frequency(unsigned digit) const {
    return total == 0 ? 0.0
                      : static_cast<double>(counts[digit]) /
                            static_cast<double>(total);
  }
};

// Throws std::domain_error if m_max == 0.
TailDistribution trailing_digit_empirical(uint64_t m_max);

// Expected count of k-th powers among the unchecked rotation blocks,
// summed in log10 space. The block of digit length 4j contributes
//   (4j / (9 * 10^(4j-1))) * (10^(4j/k) - 10^((4j-1)/k))
// for each exponent k. j runs from 309 (the first unverified length) to
// j_max; k runs over 2..k_max. For fixed j the summand decays like
// ln(10)/k, so the k sum is truncated rather than bounded; the j tail is
// dominated by a geometric series with ratio at most 10^(4/k-4) <= 1/100,
// and that bound is what log10_j_tail reports.
struct BoundResult {
  double log10_total = 0;      // log10 of the truncated double sum
  double log10_k2 = 0;         // log10 of the k = 2 band alone
  double k2_fraction = 0;      // k = 2 band / total
  double log10_j_tail = 0;     // geometric bound on the dropped j > j_max mass
  double log10_last_k_band = 0;  // log10 of the k = k_max band
};

// Throws std::domain_error unless j_max >= 309 and k_max >= 2.
BoundResult kashihara_bound_log10(uint32_t j_max, uint32_t k_max);

namespace detail {

// log10 of one summand; exposed for the test oracle.
double bound_term_log10(uint32_t j, uint32_t k);

// log10(10^a + 10^b) without leaving log space.
double log10_add(double a, double b);

}  // namespace detail

}  // namespace permscan
