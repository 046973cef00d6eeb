#include <doctest.h>

#include "core/rational.hpp"

using pastrev::DivideByZero;
using pastrev::ParseError;
using pastrev::Rational;

TEST_CASE("rationals stay canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).den() == 2);  // denominator stays positive
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(-4, 2).str() == "-2");
}

TEST_CASE("arithmetic") {
  const Rational half(1, 2), third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(-half == Rational(-1, 2));
  CHECK(half < Rational(2, 3));
  CHECK_THROWS_AS(half / Rational(0), DivideByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivideByZero);
}

TEST_CASE("arbitrary precision survives round trips") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000003);
  const Rational reciprocal = Rational(1) / big;
  CHECK(big * reciprocal == Rational(1));
  CHECK(Rational::from_string(big.str()) == big);
}

TEST_CASE("parsing") {
  CHECK(Rational::from_string("2/4") == Rational(1, 2));
  CHECK(Rational::from_string("-3") == Rational(-3));
  CHECK(Rational::from_string("+7/14") == Rational(1, 2));
  CHECK(Rational::from_string("0/9") == Rational(0));
  CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::from_string(""), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/"), ParseError);
}

TEST_CASE("string form is p or p/q") {
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(5).str() == "5");
}
