#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csigma/rational.hpp"

using csigma::Rational;

TEST_CASE("canonical reduced form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, 2).den() == 2);
  CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("arithmetic and comparisons") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(csigma::abs(Rational(-5, 2)) == Rational(5, 2));
  CHECK(csigma::max(Rational(1), Rational(3, 2)) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("parse and format round trip") {
  CHECK(csigma::parse_rational("3/4") == Rational(3, 4));
  CHECK(csigma::parse_rational("-6/4") == Rational(-3, 2));
  CHECK(csigma::parse_rational("17") == Rational(17));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(5).str() == "5");
  CHECK_THROWS_AS(csigma::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(csigma::parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(csigma::parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("field identities on random small rationals") {
  std::mt19937 rng(7);
  auto draw = [&] {
    auto num = static_cast<std::int64_t>(rng() % 41) - 20;
    auto den = static_cast<std::int64_t>(rng() % 12) + 1;
    return Rational(num, den);
  };
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
    CHECK((a < b) == !(b <= a));
  }
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
}
