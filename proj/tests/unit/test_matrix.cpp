#include <doctest.h>

#include "core/matrix.hpp"
#include "core/rng.hpp"

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

Vector vec(std::initializer_list<long> entries) {
  std::vector<Rational> out;
  for (long e : entries) out.emplace_back(e);
  return Vector(std::move(out));
}

const Matrix kWorked = mat({{4, 6, 8, 8}, {1, 3, 5, 4}, {3, 2, 7, 7}});

}  // namespace

TEST_CASE("the three reversals on the worked 3x4 example") {
  CHECK(reverse_rows(kWorked) == mat({{8, 8, 6, 4}, {4, 5, 3, 1}, {7, 7, 2, 3}}));
  CHECK(reverse_cols(kWorked) == mat({{3, 2, 7, 7}, {1, 3, 5, 4}, {4, 6, 8, 8}}));
  CHECK(reverse_full(kWorked) == mat({{7, 7, 2, 3}, {4, 5, 3, 1}, {8, 8, 6, 4}}));
  CHECK(reverse_full(kWorked) == reverse_rows(reverse_cols(kWorked)));
  CHECK(reverse_full(kWorked) == reverse_cols(reverse_rows(kWorked)));
}

TEST_CASE("reversing_matrix") {
  CHECK(reversing_matrix(2) == mat({{0, 1}, {1, 0}}));
  CHECK(reversing_matrix(3) == mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(reversing_matrix(4) * reversing_matrix(4) == Matrix::identity(4));
  CHECK_THROWS_AS(reversing_matrix(0), InvalidDimension);

  // sandwich identity on the worked example
  CHECK(reverse_full(kWorked) == reversing_matrix(3) * kWorked * reversing_matrix(4));
}

TEST_CASE("pastes") {
  CHECK(paste_rows(mat({{1, 2}, {3, 4}}), mat({{5}, {6}})) == mat({{1, 2, 5}, {3, 4, 6}}));
  CHECK(paste_cols(mat({{1, 2}}), mat({{3, 4}})) == mat({{1, 2}, {3, 4}}));
  CHECK(reverse_rows(paste_rows(mat({{1, 2}, {3, 4}}), mat({{5}, {6}}))) ==
        paste_rows(reverse_rows(mat({{5}, {6}})), reverse_rows(mat({{1, 2}, {3, 4}}))));
  CHECK_THROWS_AS(paste_rows(mat({{1}}), mat({{1}, {2}})), ShapeError);
  CHECK_THROWS_AS(paste_cols(mat({{1}}), mat({{1, 2}})), ShapeError);
}

TEST_CASE("paste_blocks") {
  CHECK(paste_blocks(mat({{1}}), mat({{-1}})) == mat({{1, 0}, {0, -1}}));
  CHECK(paste_blocks(Matrix::identity(2), Matrix::identity(1)) == Matrix::identity(3));
  CHECK(reverse_full(paste_blocks(mat({{1, 2}, {3, 4}}), mat({{5}}))) ==
        paste_blocks(reverse_full(mat({{5}})), reverse_full(mat({{1, 2}, {3, 4}}))));
}

TEST_CASE("paste_rows_via_embedding") {
  CHECK(paste_rows_via_embedding(mat({{1, 2}, {3, 4}}), mat({{5}, {6}})) ==
        mat({{1, 2, 5}, {3, 4, 6}}));
  CHECK(paste_rows_via_embedding(Matrix::identity(1), Matrix::zeros(1, 1)) == mat({{1, 0}}));
  CHECK_THROWS_AS(paste_rows_via_embedding(mat({{1}}), mat({{1}, {2}})), ShapeError);

  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.dim(5);
    const Matrix a = random_matrix(rng, n, rng.dim(5), 9);
    const Matrix b = random_matrix(rng, n, rng.dim(5), 9);
    CHECK(paste_rows_via_embedding(a, b) == paste_rows(a, b));
  }
}

TEST_CASE("vectorize and devectorize") {
  CHECK(vectorize(mat({{1, 2}, {3, 4}})) == vec({1, 2, 3, 4}));
  CHECK(devectorize(vec({1, 2, 3, 4}), 2, 2) == mat({{1, 2}, {3, 4}}));
  CHECK(vectorize(reverse_full(mat({{1, 2}, {3, 4}}))) ==
        reverse(vectorize(mat({{1, 2}, {3, 4}}))));
  CHECK_THROWS_AS(devectorize(vec({1, 2, 3}), 2, 2), ShapeError);
}

TEST_CASE("augmented") {
  CHECK(augmented(mat({{1, 2}, {3, 4}}), vec({5, 6})) == mat({{1, 2, 5}, {3, 4, 6}}));
  CHECK(augmented(Matrix::identity(1), vec({0})) == mat({{1, 0}}));
  CHECK(transpose(augmented(mat({{1, 2}, {3, 4}}), vec({5, 6}))) ==
        paste_cols(transpose(mat({{1, 2}, {3, 4}})), Matrix::row_vector(vec({5, 6}))));
  CHECK_THROWS_AS(augmented(mat({{1, 2}}), vec({1, 2})), ShapeError);
}

TEST_CASE("plumbing arithmetic") {
  CHECK(Matrix::identity(2) * mat({{1, 2}, {3, 4}}) == mat({{1, 2}, {3, 4}}));
  CHECK(diagonal(mat({{1, 2}, {3, 4}})) == vec({1, 4}));
  CHECK(reverse(diagonal(mat({{1, 2}, {3, 4}}))) ==
        diagonal(reverse_full(mat({{1, 2}, {3, 4}}))));
  CHECK_THROWS_AS(diagonal(mat({{1, 2}})), NotSquare);
  CHECK_THROWS_AS(mat({{1}}) * mat({{1, 2}, {3, 4}}), ShapeError);
  CHECK_THROWS_AS(mat({{1}}) + mat({{1, 2}}), ShapeError);
  CHECK_THROWS_AS(Matrix(0, 1), InvalidDimension);
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<Rational>(3)), ShapeError);
}

TEST_CASE("product transport identities on random shapes") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.dim(5), k = rng.dim(5), m = rng.dim(5);
    const Matrix a = random_matrix(rng, n, k, 9);
    const Matrix b = random_matrix(rng, k, m, 9);
    CHECK(reverse_rows(a * b) == a * reverse_rows(b));
    CHECK(reverse_cols(a * b) == reverse_cols(a) * b);
    CHECK(reverse_full(a * b) == reverse_full(a) * reverse_full(b));
    CHECK(reverse_full(a) == reversing_matrix(n) * a * reversing_matrix(k));
  }
}
