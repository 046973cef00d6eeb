#include <doctest.h>

#include "core/linalg.hpp"
#include "core/rng.hpp"
#include "oracles.hpp"

using namespace pastrev;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> data;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (long e : row) r.emplace_back(e);
    data.push_back(std::move(r));
  }
  return Matrix::from_rows(data);
}

Polynomial poly(std::initializer_list<long> ascending) {
  std::vector<Rational> coeffs;
  for (long c : ascending) coeffs.emplace_back(c);
  return Polynomial(std::move(coeffs));
}

Polynomial reversing_charpoly_expected(int n) {
  // (x-1)^ceil(n/2) (x+1)^floor(n/2), built by convolution
  Polynomial expected = Polynomial::constant(Rational(1));
  for (int i = 0; i < (n + 1) / 2; ++i) expected = expected * poly({-1, 1});
  for (int i = 0; i < n / 2; ++i) expected = expected * poly({1, 1});
  return expected;
}

}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());  // normalization
  CHECK(poly({1, 2}).degree() == 1);
  CHECK(poly({-2, 0, 1}).eval(Rational(3)) == Rational(7));
  CHECK(poly({1, 1}) * poly({-1, 1}) == poly({-1, 0, 1}));
  CHECK(poly({1, 2}) + poly({1, -2}) == poly({2}));
  CHECK(Polynomial::monomial(3).coeff(3) == Rational(1));
}

TEST_CASE("determinant") {
  CHECK(determinant(Matrix::identity(4)) == Rational(1));
  CHECK(determinant(mat({{1, 2}, {3, 4}})) == Rational(-2));
  CHECK(determinant(reverse_cols(mat({{1, 2}, {3, 4}}))) == Rational(2));
  CHECK_THROWS_AS(determinant(mat({{1, 2}})), NotSquare);

  // rational entries go through the denominator clearing path
  Matrix q(2, 2, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)});
  CHECK(determinant(q) == Rational(1, 2) * Rational(1, 7) - Rational(1, 3) * Rational(1, 5));
}

TEST_CASE("bareiss agrees with the cofactor oracle") {
  // zero pivots force the row-swap path
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == Rational(-1));
  CHECK(determinant(reversing_matrix(3)) == Rational(-1));
  CHECK(determinant(reversing_matrix(4)) == Rational(1));
  CHECK(determinant(mat({{0, 1, 2}, {0, 0, 3}, {4, 5, 6}})) ==
        oracle::det_cofactor(mat({{0, 1, 2}, {0, 0, 3}, {4, 5, 6}})));
  CHECK(determinant(mat({{0, 0}, {0, 0}})) == Rational(0));
  CHECK(determinant(mat({{0, 2, 0, 1}, {0, 0, 0, 3}, {1, 0, 0, 0}, {0, 0, 5, 0}})) ==
        oracle::det_cofactor(mat({{0, 2, 0, 1}, {0, 0, 0, 3}, {1, 0, 0, 0}, {0, 0, 5, 0}})));

  Rng rng(314);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rng.dim(5);
    const Matrix a = random_matrix(rng, n, n, 9);
    CHECK(determinant(a) == oracle::det_cofactor(a));
  }
  // sparse draws hit degenerate pivot patterns more often
  for (int trial = 0; trial < 80; ++trial) {
    const int n = rng.dim(5);
    const Matrix a = random_matrix(rng, n, n, 1);
    CHECK(determinant(a) == oracle::det_cofactor(a));
  }
  // and on matrices with fractional entries
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.dim(4);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = rng.rational_scalar(9);
    CHECK(determinant(a) == oracle::det_cofactor(a));
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(mat({{2, 0}, {0, 2}})) ==
        Matrix(2, 2, {Rational(1, 2), Rational(0), Rational(0), Rational(1, 2)}));
  CHECK_THROWS_AS(inverse(mat({{1, 1}, {1, 1}})), Singular);
  CHECK_THROWS_AS(inverse(mat({{1, 2}})), NotSquare);
  CHECK(inverse(reverse_full(mat({{1, 2}, {3, 4}}))) ==
        reverse_full(inverse(mat({{1, 2}, {3, 4}}))));

  Rng rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.dim(5);
    Matrix a = random_matrix(rng, n, n, 9);
    if (determinant(a).is_zero()) continue;
    CHECK(a * inverse(a) == Matrix::identity(n));
    CHECK(inverse(a) * a == Matrix::identity(n));
  }
}

TEST_CASE("adjugate") {
  CHECK(adjugate(mat({{1, 2}, {3, 4}})) == mat({{4, -2}, {-3, 1}}));
  CHECK(adjugate(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(reverse_full(adjugate(mat({{1, 2}, {3, 4}}))) ==
        adjugate(reverse_full(mat({{1, 2}, {3, 4}}))));
  CHECK_THROWS_AS(adjugate(mat({{1, 2}})), NotSquare);

  Rng rng(161803);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.dim(4);
    Matrix a = random_matrix(rng, n, n, 9);
    if (rng.coin() && n >= 2)
      for (int j = 0; j < n; ++j) a.at(n - 1, j) = a.at(0, j);  // singular branch
    const Rational d = determinant(a);
    CHECK(a * adjugate(a) == d * Matrix::identity(n));
    CHECK(reverse_full(adjugate(a)) == adjugate(reverse_full(a)));
  }
}

TEST_CASE("trace and rank") {
  CHECK(trace(mat({{1, 2}, {3, 4}})) == Rational(5));
  CHECK(trace(paste_blocks(mat({{1}}), mat({{2}}))) == Rational(3));
  CHECK(rank(mat({{1, 1}, {1, 1}})) == 1);
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix::zeros(2, 3)) == 0);
  CHECK_THROWS_AS(trace(mat({{1, 2}})), NotSquare);
}

TEST_CASE("charpoly") {
  CHECK(charpoly(reversing_matrix(2)) == poly({-1, 0, 1}));
  CHECK(charpoly(reversing_matrix(3)) == poly({1, -1, -1, 1}));  // (x+1)(x-1)^2
  CHECK(charpoly(mat({{1, 2}, {3, 4}})) == poly({-2, -5, 1}));
  CHECK_THROWS_AS(charpoly(mat({{1, 2}})), NotSquare);

  for (int n = 1; n <= 8; ++n)
    CHECK(charpoly(reversing_matrix(n)) == reversing_charpoly_expected(n));

  // det and trace read off the characteristic coefficients
  Rng rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.dim(5);
    const Matrix a = random_matrix(rng, n, n, 9);
    const Polynomial p = charpoly(a);
    CHECK(p.degree() == n);
    CHECK(p.coeff(n) == Rational(1));
    CHECK(p.coeff(n - 1) == -trace(a));
    const Rational det_from_poly =
        n % 2 == 0 ? p.coeff(0) : -p.coeff(0);  // det = (-1)^n p(0)
    CHECK(det_from_poly == determinant(a));
  }
}

TEST_CASE("polyeval") {
  CHECK(polyeval(poly({-1, 0, 1}), reversing_matrix(4)).is_zero());
  CHECK(polyeval(charpoly(mat({{1, 2}, {3, 4}})), mat({{1, 2}, {3, 4}})).is_zero());
  CHECK(polyeval(poly({1}), mat({{9, 1}, {0, 9}})) == Matrix::identity(2));
  CHECK(polyeval(Polynomial(), mat({{3}})).is_zero());
  for (int n = 1; n <= 8; ++n) CHECK(polyeval(poly({-1, 0, 1}), reversing_matrix(n)).is_zero());
}

TEST_CASE("reversing_jordan") {
  const JordanPair two = reversing_jordan(2);
  CHECK(two.j == mat({{1, 0}, {0, -1}}));
  CHECK(two.p == mat({{1, 1}, {1, -1}}));

  const JordanPair three = reversing_jordan(3);
  CHECK(three.j == mat({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  CHECK(three.p == mat({{1, 0, 1}, {0, 1, 0}, {1, 0, -1}}));

  const JordanPair one = reversing_jordan(1);
  CHECK(one.j == Matrix::identity(1));
  CHECK(one.p == Matrix::identity(1));

  CHECK_THROWS_AS(reversing_jordan(0), InvalidDimension);

  for (int n = 1; n <= 8; ++n) {
    const JordanPair pair = reversing_jordan(n);
    CHECK(pair.p == transpose(pair.p));
    CHECK(pair.p * pair.j * inverse(pair.p) == reversing_matrix(n));
    int plus = 0, minus = 0;
    for (int i = 0; i < n; ++i) {
      if (pair.j.at(i, i) == Rational(1)) ++plus;
      if (pair.j.at(i, i) == Rational(-1)) ++minus;
    }
    CHECK(plus == (n + 1) / 2);
    CHECK(minus == n / 2);
  }
}

TEST_CASE("jordan transport on the worked 3x3 example") {
  const Matrix a = mat({{1, 2, 1}, {0, -1, 0}, {-1, 1, 3}});
  const Matrix j = mat({{-1, 0, 0}, {0, 2, 1}, {0, 0, 2}});
  // eigenvector for -1, eigenvector for 2, generalized eigenvector, as columns
  const Matrix p = mat({{7, 1, 0}, {-9, 0, 0}, {4, 1, 1}});

  REQUIRE(p * j * inverse(p) == a);  // the derived similarity is genuine

  const auto [lhs, rhs] = jordan_transport(p, j);
  CHECK(lhs == rhs);
  CHECK(lhs == reverse_full(a));
  CHECK(reverse_full(a) == reverse_cols(p) * j * inverse(reverse_cols(p)));

  // the reversal of J is displayed in the source as a non-Jordan matrix
  CHECK(reverse_full(j) == mat({{2, 0, 0}, {1, 2, 0}, {0, 0, -1}}));

  // identity similarity degenerates to plain reversal
  const auto [l2, r2] = jordan_transport(Matrix::identity(2), mat({{1, 0}, {0, 2}}));
  CHECK(l2 == r2);
  CHECK(l2 == reverse_full(mat({{1, 0}, {0, 2}})));

  CHECK_THROWS_AS(jordan_transport(mat({{1, 1}, {1, 1}}), Matrix::identity(2)), Singular);
  CHECK_THROWS_AS(jordan_transport(mat({{1, 2}}), Matrix::identity(2)), ShapeError);
}
