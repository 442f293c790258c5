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

#include <gmp.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace permscan {

// Arbitrary-precision natural number with value semantics.
//
// Thin RAII wrapper over a GMP mpz_t restricted to non-negative values.
// Only arithmetic, comparison, and radix conversion are delegated to GMP;
// every number-theoretic algorithm in this project (roots, power
// decomposition, sieves) is implemented on top of these primitives.
class Natural {
 public:
  Natural() noexcept { mpz_init(z_); }
  Natural(uint64_t v) { mpz_init_set_ui(z_, v); }  // NOLINT: implicit by design
  Natural(const Natural& o) { mpz_init_set(z_, o.z_); }
  Natural(Natural&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Natural& operator=(const Natural& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Natural& operator=(Natural&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Natural() { mpz_clear(z_); }

  // Parses a decimal string. Throws std::invalid_argument on an empty
  // string, a non-digit character, or a leading zero (except "0" itself).
  static Natural from_decimal(std::string_view s);

  std::string to_decimal() const;

  // Exact number of decimal digits; 1 for zero.
  uint64_t digit_count() const;

  // Number of significant bits; 1 for zero (matches mpz_sizeinbase).
  uint64_t bit_length() const { return mpz_sizeinbase(z_, 2); }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool fits_u64() const { return mpz_sizeinbase(z_, 2) <= 64; }
  uint64_t to_u64() const;  // throws std::overflow_error if !fits_u64()

  uint64_t mod_u64(uint64_t m) const;  // throws std::invalid_argument if m == 0

  static Natural pow(const Natural& base, uint64_t exp);
  static Natural pow10(uint64_t exp);

  Natural& operator+=(const Natural& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Natural& operator-=(const Natural& o);  // throws if result would be negative
  Natural& operator*=(const Natural& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }
  Natural& operator/=(const Natural& o);  // floor division; throws on zero
  Natural& operator+=(uint64_t v) {
    mpz_add_ui(z_, z_, v);
    return *this;
  }
  Natural& operator-=(uint64_t v);
  Natural& operator*=(uint64_t v) {
    mpz_mul_ui(z_, z_, v);
    return *this;
  }
  Natural& operator++() {
    mpz_add_ui(z_, z_, 1);
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(const Natural& a, const Natural& b);

  friend bool operator==(const Natural& a, const Natural& b) {
    return mpz_cmp(a.z_, b.z_) == 0;
  }
  friend bool operator!=(const Natural& a, const Natural& b) {
    return mpz_cmp(a.z_, b.z_) != 0;
  }
  friend bool operator<(const Natural& a, const Natural& b) {
    return mpz_cmp(a.z_, b.z_) < 0;
  }
  friend bool operator<=(const Natural& a, const Natural& b) {
    return mpz_cmp(a.z_, b.z_) <= 0;
  }
  friend bool operator>(const Natural& a, const Natural& b) {
    return mpz_cmp(a.z_, b.z_) > 0;
  }
  friend bool operator>=(const Natural& a, const Natural& b) {
    return mpz_cmp(a.z_, b.z_) >= 0;
  }

  // Direct access for core modules that drive GMP in hot loops.
  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

}  // namespace permscan
