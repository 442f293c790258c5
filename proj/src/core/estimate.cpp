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
#include "core/estimate.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace permscan {

namespace detail {

double log10_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double hi = a > b ? a : b;
  double lo = a > b ? b : a;
  return hi + std::log1p(std::pow(10.0, lo - hi)) / std::log(10.0);
}

double bound_term_log10(uint32_t j, uint32_t k) {
  // (4j / (9 * 10^(4j-1))) * 10^(4j/k) * (1 - 10^(-1/k))
  double dj = static_cast<double>(j);
  double dk = static_cast<double>(k);
  double log_factor = std::log10(4.0 * dj / 9.0) - (4.0 * dj - 1.0);
  double log_width = 4.0 * dj / dk + std::log10(-std::expm1(-std::log(10.0) / dk));
  return log_factor + log_width;
}

}  // namespace detail

Rational trailing_digit_law(unsigned digit) {
  if (digit > 9) throw std::domain_error("digit must be 0..9");
  uint64_t num = digit == 0 ? 1 : 11 - digit;
  uint64_t g = std::gcd(num, uint64_t{55});
  return {num / g, 55 / g};
}

TailDistribution trailing_digit_empirical(uint64_t m_max) {
  if (m_max == 0) throw std::domain_error("m_max must be positive");
  TailDistribution out;
  // Running census of the tokens 1..m; each block adds the whole census.
  std::array<uint64_t, 10> tokens{};
  for (uint64_t m = 1; m <= m_max; ++m) {
    ++tokens[m % 10];
    for (unsigned d = 0; d < 10; ++d) out.counts[d] += tokens[d];
    out.total += m;
  }
  return out;
}

BoundResult kashihara_bound_log10(uint32_t j_max, uint32_t k_max) {
  if (j_max < 309) throw std::domain_error("j_max must be at least 309");
  if (k_max < 2) throw std::domain_error("k_max must be at least 2");

  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  BoundResult r;
  r.log10_total = kNegInf;
  r.log10_k2 = kNegInf;
  r.log10_j_tail = kNegInf;
  r.log10_last_k_band = kNegInf;

  for (uint32_t k = 2; k <= k_max; ++k) {
    double band = kNegInf;
    for (uint32_t j = 309; j <= j_max; ++j)
      band = detail::log10_add(band, detail::bound_term_log10(j, k));
    r.log10_total = detail::log10_add(r.log10_total, band);
    if (k == 2) r.log10_k2 = band;
    if (k == k_max) r.log10_last_k_band = band;

    // Successive j terms shrink by ((j+1)/j) * 10^(4/k - 4) < 1, so the
    // dropped j > j_max mass is below term(j_max + 1, k) / (1 - ratio).
    double ratio = (static_cast<double>(j_max) + 1.0) /
                       static_cast<double>(j_max) *
                       std::pow(10.0, 4.0 / static_cast<double>(k) - 4.0);
    double tail = detail::bound_term_log10(j_max + 1, k) - std::log10(1.0 - ratio);
    r.log10_j_tail = detail::log10_add(r.log10_j_tail, tail);
  }
  r.k2_fraction = std::pow(10.0, r.log10_k2 - r.log10_total);
  return r;
}

}  // namespace permscan
