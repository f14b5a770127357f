// Copyright 2026 The spg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPG_RATIONAL_HPP_
#define SPG_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace spg {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; every operation is exact. Backed by GMP.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);
  explicit Rational(const mpz_class& n) : value_(n) {}

  /// Parses "a/b", an optionally signed integer, or a plain decimal such as
  /// "0.1" (converted exactly via powers of ten). Returns nullopt on any
  /// other shape; floating point notation is deliberately not accepted.
  static std::optional<Rational> parse(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Exact non-negative integer power.
  Rational pow(unsigned long exponent) const;

  Rational abs() const;

  /// Lowest-terms text form: "a/b", or just "a" when the denominator is 1.
  std::string str() const;

  /// Decimal approximation with the given number of significant digits.
  /// The fraction form is authoritative; this is a display aid only.
  std::string decimal(int significant_digits = 12) const;

  double to_double() const { return value_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : value_(std::move(q)) {}

  mpq_class value_;  // canonical: gcd(|num|, den) == 1, den > 0
};

/// n! as an arbitrary-precision integer.
mpz_class factorial(unsigned long n);

/// base^exp for arbitrary-precision integers, exp >= 0.
mpz_class pow_z(const mpz_class& base, unsigned long exp);

/// Number of bits in |v|'s binary representation; bit_length(0) == 0.
std::size_t bit_length(const mpz_class& v);

}  // namespace spg

#endif  // SPG_RATIONAL_HPP_
