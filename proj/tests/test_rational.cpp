// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isotensor/rational.hpp"

using isotensor::Rational;

TEST_CASE("construction keeps lowest terms with positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(3) / Rational(0), std::domain_error);
}

TEST_CASE("parse accepts p and p/q only") {
  CHECK(Rational::parse("-2/3") == Rational(-2, 3));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1 / 2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(abs(Rational(-5, 7)) == Rational(5, 7));

  // No drift: summing 1/3 three hundred times gives exactly 100.
  Rational sum;
  for (int i = 0; i < 300; ++i) sum += a;
  CHECK(sum == Rational(100));
}

TEST_CASE("ordering and predicates") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
  CHECK(Rational().is_zero());
  CHECK(Rational(-3, 4).sign() == -1);
}

TEST_CASE("round trip through str") {
  for (long n = -20; n <= 20; ++n)
    for (long d = 1; d <= 9; ++d) {
      const Rational q(n, d);
      CHECK(Rational::parse(q.str()) == q);
    }
}
