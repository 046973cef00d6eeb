#include "matrix.hpp"

#include <algorithm>
#include <utility>

namespace pastrev {

namespace {

void check_dims(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidDimension("matrix dimensions must be >= 1");
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  data_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  check_dims(rows, cols);
  if (data_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw ShapeError("matrix data length does not match rows*cols");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw InvalidDimension("matrix dimensions must be >= 1");
  const int m = static_cast<int>(rows.front().size());
  std::vector<Rational> data;
  data.reserve(rows.size() * rows.front().size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m) throw ShapeError("ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(static_cast<int>(rows.size()), m, std::move(data));
}

Matrix Matrix::row_vector(const Vector& v) {
  return Matrix(1, v.size(), v.entries());
}

Matrix Matrix::column_vector(const Vector& v) {
  return Matrix(v.size(), 1, v.entries());
}

const Rational& Matrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw IndexOutOfRange("matrix index out of range");
  return data_[static_cast<size_t>(i) * cols_ + j];
}

Rational& Matrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw IndexOutOfRange("matrix index out of range");
  return data_[static_cast<size_t>(i) * cols_ + j];
}

Vector Matrix::row(int i) const {
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return Vector(std::move(out));
}

Vector Matrix::column(int j) const {
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return Vector(std::move(out));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ShapeError("matrix addition needs equal shapes");
  Matrix out = a;
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ShapeError("matrix subtraction needs equal shapes");
  Matrix out = a;
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw ShapeError("matrix product needs inner dimensions to agree");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= c;
  return out;
}

Matrix Matrix::operator-() const { return Rational(-1) * *this; }

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Vector diagonal(const Matrix& a) {
  if (!a.is_square()) throw NotSquare("diagonal needs a square matrix");
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) out.push_back(a.at(i, i));
  return Vector(std::move(out));
}

Matrix reverse_rows(const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, a.cols() - 1 - j);
  return out;
}

Matrix reverse_cols(const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(a.rows() - 1 - i, j);
  return out;
}

Matrix reverse_full(const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.at(i, j) = a.at(a.rows() - 1 - i, a.cols() - 1 - j);
  return out;
}

Matrix reverse(const Matrix& a, Axis axis) {
  switch (axis) {
    case Axis::Rows: return reverse_rows(a);
    case Axis::Cols: return reverse_cols(a);
    case Axis::Full: return reverse_full(a);
  }
  throw Error("unreachable axis");
}

Matrix reversing_matrix(int n) {
  if (n < 1) throw InvalidDimension("exchange matrix needs n >= 1");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = Rational(1);
  return m;
}

Matrix paste_rows(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("paste by rows needs equal row counts");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

Matrix paste_cols(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("paste by columns needs equal column counts");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
  }
  return out;
}

Matrix paste_blocks(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

Matrix paste_rows_via_embedding(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("paste by rows needs equal row counts");
  const int m = a.cols(), p = b.cols();
  Matrix e1(m, m + p);  // [I_m | 0]
  for (int i = 0; i < m; ++i) e1.at(i, i) = Rational(1);
  Matrix e2(p, m + p);  // [0 | I_p]
  for (int i = 0; i < p; ++i) e2.at(i, m + i) = Rational(1);
  return a * e1 + b * e2;
}

Vector vectorize(const Matrix& a) {
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.push_back(a.at(i, j));
  return Vector(std::move(out));
}

Matrix devectorize(const Vector& v, int rows, int cols) {
  check_dims(rows, cols);
  if (v.size() != rows * cols)
    throw ShapeError("vector length does not match rows*cols");
  return Matrix(rows, cols, v.entries());
}

Matrix augmented(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw ShapeError("augmented column length must equal row count");
  return paste_rows(a, Matrix::column_vector(b));
}

Matrix outer(const Vector& u, const Vector& v) {
  Matrix out(u.size(), v.size());
  for (int i = 0; i < u.size(); ++i)
    for (int j = 0; j < v.size(); ++j) out.at(i, j) = u[i] * v[j];
  return out;
}

}  // namespace pastrev
