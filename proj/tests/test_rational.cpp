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

#include <doctest.h>

#include "spg/errors.hpp"
#include "support/generators.hpp"

namespace spg {
namespace {

TEST_CASE("construction always lands in lowest terms") {
  Rational r(6, 4);
  CHECK(r.num() == 3);
  CHECK(r.den() == 2);

  Rational neg(3, -6);
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 2);

  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parse accepts fractions, integers and exact decimals") {
  CHECK(*Rational::parse("1/10") == Rational(1, 10));
  CHECK(*Rational::parse("9/10") == Rational(9, 10));
  CHECK(*Rational::parse("0.1") == Rational(1, 10));
  CHECK(*Rational::parse("0.125") == Rational(1, 8));
  CHECK(*Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(*Rational::parse("3") == Rational(3));
  CHECK(*Rational::parse("-4/6") == Rational(-2, 3));

  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("1e-5"));
  CHECK(!Rational::parse("0x10"));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("1.2.3"));
  CHECK(!Rational::parse("."));
  CHECK(!Rational::parse("1/"));
}

TEST_CASE("str and decimal formatting") {
  CHECK(Rational(1, 10).str() == "1/10");
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(1, 2).decimal(3) == "5.00e-1");
  CHECK(Rational(1).decimal(3) == "1.00");
  CHECK(Rational(-1, 4).decimal(4) == "-2.500e-1");
}

TEST_CASE("integer power") {
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-1, 2).pow(2) == Rational(1, 4));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("arithmetic laws on randomized triples") {
  testing::Rng rng(20260810);
  auto random_rational = [&rng]() {
    long num = static_cast<long>(rng.below(2001)) - 1000;
    long den = 1 + static_cast<long>(rng.below(50));
    return Rational(num, den);
  };
  for (int i = 0; i < 2000; ++i) {
    Rational a = random_rational();
    Rational b = random_rational();
    Rational c = random_rational();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // Comparison consistency: a < b iff a - b < 0, and trichotomy.
    CHECK((a < b) == ((a - b).sign() < 0));
    CHECK(((a < b) + (a == b) + (b < a)) == 1);
    if (!c.is_zero()) {
      CHECK(a / c * c == a);
    }
  }
}

TEST_CASE("bit_length and integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(pow_z(10, 3) == 1000);
  CHECK(bit_length(mpz_class(0)) == 0);
  CHECK(bit_length(mpz_class(1)) == 1);
  CHECK(bit_length(mpz_class(65537)) == 17);
}

}  // namespace
}  // namespace spg
