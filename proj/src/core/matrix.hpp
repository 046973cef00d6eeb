#pragma once

#include <vector>

#include "rational.hpp"
#include "vector.hpp"

namespace pastrev {

/// Dense n x m matrix of rationals, row-major, n, m >= 1.
class Matrix {
 public:
  Matrix(int rows, int cols);  // zero-filled
  Matrix(int rows, int cols, std::vector<Rational> data);

  static Matrix identity(int n);
  static Matrix zeros(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix row_vector(const Vector& v);
  static Matrix column_vector(const Vector& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& at(int i, int j) const;  // 0-based
  Rational& at(int i, int j);

  Vector row(int i) const;
  Vector column(int j) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  Matrix operator-() const;

  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

enum class Axis { Rows, Cols, Full };

Matrix transpose(const Matrix& a);
Vector diagonal(const Matrix& a);  // NotSquare otherwise

// Entry maps a(i, m+1-j), a(n+1-i, j), a(n+1-i, m+1-j); all involutions.
Matrix reverse_rows(const Matrix& a);
Matrix reverse_cols(const Matrix& a);
Matrix reverse_full(const Matrix& a);
Matrix reverse(const Matrix& a, Axis axis);

/// The n x n exchange (anti-identity) matrix.
Matrix reversing_matrix(int n);

Matrix paste_rows(const Matrix& a, const Matrix& b);   // side by side
Matrix paste_cols(const Matrix& a, const Matrix& b);   // stacked
Matrix paste_blocks(const Matrix& a, const Matrix& b); // block diagonal

/// A*[I|0] + B*[0|I]; agrees with paste_rows entry for entry.
Matrix paste_rows_via_embedding(const Matrix& a, const Matrix& b);

Vector vectorize(const Matrix& a);  // row-major flattening
Matrix devectorize(const Vector& v, int rows, int cols);

/// paste_rows(A, column(b)); requires |b| = rows(A).
Matrix augmented(const Matrix& a, const Vector& b);

Matrix outer(const Vector& u, const Vector& v);  // u v^T

}  // namespace pastrev
