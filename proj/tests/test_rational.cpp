#include <doctest.h>

#include <cmath>

#include "rational.hpp"

using nswopt::InputError;
using nswopt::Rational;

TEST_CASE("rational parsing and formatting") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("2/4") == Rational(1, 2));  // canonical form
  CHECK(Rational::parse("-2/4").str() == "-1/2");
  CHECK(Rational::parse("0").is_zero());
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(22, 7).str() == "22/7");

  CHECK_THROWS_AS(Rational::parse(""), InputError);
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("a/b"), InputError);
  CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
  CHECK_THROWS_AS(Rational::parse("/3"), InputError);
}

TEST_CASE("rational arithmetic stays exact") {
  Rational a(1, 3);
  Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK_THROWS_AS(a / Rational(0), InputError);

  // No drift over many operations.
  Rational sum;
  for (int i = 0; i < 1000; ++i) sum += Rational(1, 1000);
  CHECK(sum == Rational(1));
}

TEST_CASE("rational ln") {
  CHECK(Rational(8).ln() == doctest::Approx(3 * std::log(2.0)));
  CHECK(Rational(1, 8).ln() == doctest::Approx(-3 * std::log(2.0)));
  CHECK(Rational(1).ln() == doctest::Approx(0.0));
  CHECK_THROWS_AS(Rational(0).ln(), InputError);

  // Values far beyond double range still get a finite log.
  Rational huge(1);
  for (int i = 0; i < 50; ++i) huge *= Rational(1000000000);
  CHECK(huge.ln() == doctest::Approx(50 * std::log(1e9)).epsilon(1e-12));
}
