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
#include "core/natural.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace permscan {

Natural Natural::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("non-digit in decimal string");
  }
  if (s.size() > 1 && s[0] == '0')
    throw std::invalid_argument("leading zero in decimal string");
  Natural n;
  // mpz_set_str needs a NUL-terminated buffer.
  std::string buf(s);
  if (mpz_set_str(n.z_, buf.c_str(), 10) != 0)
    throw std::invalid_argument("invalid decimal string");
  return n;
}

std::string Natural::to_decimal() const {
  std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
  mpz_get_str(buf.data(), 10, z_);
  return std::string(buf.data());
}

uint64_t Natural::digit_count() const {
  // mpz_sizeinbase is exact or one too large for base 10.
  uint64_t n = mpz_sizeinbase(z_, 10);
  if (n <= 1) return 1;
  Natural p = pow10(n - 1);
  return (mpz_cmp(z_, p.z_) < 0) ? n - 1 : n;
}

uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("value does not fit in 64 bits");
  static_assert(sizeof(unsigned long) == 8, "expects 64-bit unsigned long");
  return mpz_get_ui(z_);
}

uint64_t Natural::mod_u64(uint64_t m) const {
  if (m == 0) throw std::invalid_argument("modulus is zero");
  return mpz_fdiv_ui(z_, m);
}

Natural Natural::pow(const Natural& base, uint64_t exp) {
  Natural r;
  mpz_pow_ui(r.z_, base.z_, exp);
  return r;
}

Natural Natural::pow10(uint64_t exp) {
  Natural r;
  mpz_ui_pow_ui(r.z_, 10, exp);
  return r;
}

Natural& Natural::operator-=(const Natural& o) {
  if (mpz_cmp(z_, o.z_) < 0)
    throw std::invalid_argument("negative result in Natural subtraction");
  mpz_sub(z_, z_, o.z_);
  return *this;
}

Natural& Natural::operator-=(uint64_t v) {
  if (mpz_cmp_ui(z_, v) < 0)
    throw std::invalid_argument("negative result in Natural subtraction");
  mpz_sub_ui(z_, z_, v);
  return *this;
}

Natural& Natural::operator/=(const Natural& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  mpz_fdiv_q(z_, z_, o.z_);
  return *this;
}

Natural operator%(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw std::invalid_argument("modulus is zero");
  Natural r;
  mpz_fdiv_r(r.z_, a.z_, b.z_);
  return r;
}

}  // namespace permscan
