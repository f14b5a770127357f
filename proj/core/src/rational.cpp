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

#include "spg/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "spg/errors.hpp"

namespace spg {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw Error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : value_(std::move(num), std::move(den)) {
  if (sgn(value_.get_den()) == 0) {
    throw Error("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.value_ = -r.value_;
  return r;
}

Rational Rational::pow(unsigned long exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), exponent);
  // Lowest terms are preserved under powers; no re-canonicalization needed,
  // but Rational(num, den) canonicalizes anyway which is a cheap gcd here.
  return Rational(std::move(num), std::move(den));
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) return std::nullopt;
    return Rational(std::move(n), std::move(d));
  }

  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() || frac.empty()) return std::nullopt;
    if (!is_integer_token(whole) || !is_integer_token(frac) ||
        frac[0] == '+' || frac[0] == '-') {
      return std::nullopt;
    }
    bool negative = whole[0] == '-';
    mpz_class wz(std::string(whole), 10);
    mpz_class fz(std::string(frac), 10);
    mpz_class scale = pow_z(10, frac.size());
    mpz_class num = wz * scale + (negative ? -fz : fz);
    return Rational(std::move(num), std::move(scale));
  }

  if (!is_integer_token(text)) return std::nullopt;
  return Rational(mpz_class(std::string(text), 10));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (is_zero()) return "0";
  // Enough float precision to make the requested digits exact.
  mpf_class f(0, static_cast<mp_bitcnt_t>(significant_digits * 4 + 64));
  f = mpf_class(value_);
  mp_exp_t exp10 = 0;
  std::string digits = f.get_str(exp10, 10, significant_digits);
  bool negative = !digits.empty() && digits[0] == '-';
  if (negative) digits.erase(digits.begin());
  while (digits.size() < static_cast<std::size_t>(significant_digits)) {
    digits.push_back('0');
  }
  std::ostringstream out;
  if (negative) out << '-';
  out << digits[0];
  if (digits.size() > 1) out << '.' << digits.substr(1);
  long e = static_cast<long>(exp10) - 1;  // value = 0.digits * 10^exp10
  if (e != 0) out << 'e' << (e > 0 ? "+" : "") << e;
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class pow_z(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::size_t bit_length(const mpz_class& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace spg
