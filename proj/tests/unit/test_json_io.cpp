#include <doctest.h>

#include "core/json_io.hpp"
#include "core/rng.hpp"

using namespace pastrev;

TEST_CASE("matrix round trip is bit exact") {
  const std::string text = R"({"rows":2,"cols":2,"data":[["1","1/2"],["-3","4"]]})";
  const Matrix m = parse_matrix(text);
  CHECK(m.at(0, 1) == Rational(1, 2));
  CHECK(dump(to_json(m)) == text);
}

TEST_CASE("serialized field order is rows, cols, data") {
  const Matrix m(1, 1, {Rational(7)});
  CHECK(dump(to_json(m)) == R"({"rows":1,"cols":1,"data":[["7"]]})");
}

TEST_CASE("non-canonical rationals canonicalize on parse") {
  const Vector v = parse_vector(R"({"data":["2/4"]})");
  CHECK(v[0] == Rational(1, 2));
  CHECK(dump(to_json(v)) == R"({"data":["1/2"]})");
}

TEST_CASE("integer JSON numbers are accepted") {
  const Vector v = parse_vector(R"({"data":[1, -3, "5/2"]})");
  CHECK(v[0] == Rational(1));
  CHECK(v[1] == Rational(-3));
  CHECK(v[2] == Rational(5, 2));
}

TEST_CASE("zero denominator is a parse error") {
  CHECK_THROWS_AS(parse_vector(R"({"data":["1/0"]})"), ParseError);
  try {
    parse_vector(R"({"data":["1/0"]})");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
    CHECK(std::string(e.what()).find("data[0]") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_matrix("{\n  \"rows\": 2,\n  oops\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 0);
  }
}

TEST_CASE("structural validation") {
  CHECK_THROWS_AS(parse_matrix(R"({"cols":1,"data":[["1"]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows":2,"cols":1,"data":[["1"]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"cols":2,"data":[["1"]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows":0,"cols":1,"data":[]})"), ParseError);
  CHECK_THROWS_AS(parse_vector(R"({"data":[]})"), ParseError);
  CHECK_THROWS_AS(parse_vector(R"({"data":[1.5]})"), ParseError);
  CHECK_THROWS_AS(parse_vector(R"([1,2])"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"coeffs":"1"})"), ParseError);
}

TEST_CASE("polynomial round trip, ascending coefficients") {
  const Polynomial p = parse_polynomial(R"({"coeffs":["-2","-5","1"]})");
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rational(-2));
  CHECK(dump(to_json(p)) == R"({"coeffs":["-2","-5","1"]})");
  CHECK(dump(to_json(Polynomial())) == R"({"coeffs":[]})");
}

TEST_CASE("round trip identity on random values") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m(rng.dim(5), rng.dim(5));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rng.rational_scalar(99);
    CHECK(matrix_from_json(parse_document(dump(to_json(m)))) == m);
    const Vector v = random_vector(rng, rng.dim(6), 99);
    CHECK(vector_from_json(parse_document(dump(to_json(v)))) == v);
  }
}
