#include "linalg.hpp"

#include <utility>

namespace pastrev {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(int degree, Rational c) {
  if (degree < 0) throw InvalidDimension("monomial degree must be >= 0");
  std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
  coeffs.back() = std::move(c);
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw NotSquare("determinant needs a square matrix");
  const int n = a.rows();

  // Clear denominators row by row; det(A) = det(scaled) / prod(row lcms).
  std::vector<std::vector<mpz_class>> w(static_cast<size_t>(n),
                                        std::vector<mpz_class>(static_cast<size_t>(n)));
  mpz_class scale(1);
  for (int i = 0; i < n; ++i) {
    mpz_class row_lcm(1);
    for (int j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
                                        a.at(i, j).den().get_mpz_t());
    for (int j = 0; j < n; ++j)
      w[i][j] = a.at(i, j).num() * (row_lcm / a.at(i, j).den());
    scale *= row_lcm;
  }

  // Bareiss: all divisions below are exact.
  mpz_class prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (w[i][k] != 0) { pivot = i; break; }
      if (pivot < 0) return Rational(0);
      std::swap(w[static_cast<size_t>(k)], w[static_cast<size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = w[i][j] * w[k][k] - w[i][k] * w[k][j];
        mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }

  mpz_class det_scaled = w[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  if (sign < 0) det_scaled = -det_scaled;
  return Rational(std::move(det_scaled), std::move(scale));
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw NotSquare("inverse needs a square matrix");
  const int n = a.rows();
  Matrix w = a;
  Matrix inv = Matrix::identity(n);

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!w.at(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) throw Singular("matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(pivot, j), w.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational p = w.at(col, col);
    for (int j = 0; j < n; ++j) {
      w.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || w.at(i, col).is_zero()) continue;
      const Rational f = w.at(i, col);
      for (int j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

namespace {

Matrix delete_row_col(const Matrix& a, int row, int col) {
  Matrix out(a.rows() - 1, a.cols() - 1);
  for (int i = 0, oi = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    for (int j = 0, oj = 0; j < a.cols(); ++j) {
      if (j == col) continue;
      out.at(oi, oj) = a.at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

}  // namespace

Matrix adjugate(const Matrix& a) {
  if (!a.is_square()) throw NotSquare("adjugate needs a square matrix");
  const int n = a.rows();
  if (n == 1) return Matrix::identity(1);
  Matrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = determinant(delete_row_col(a, i, j));
      if ((i + j) % 2 != 0) c = -c;
      adj.at(j, i) = c;  // transposed cofactor
    }
  return adj;
}

Rational trace(const Matrix& a) {
  if (!a.is_square()) throw NotSquare("trace needs a square matrix");
  Rational acc;
  for (int i = 0; i < a.rows(); ++i) acc += a.at(i, i);
  return acc;
}

int rank(const Matrix& a) {
  Matrix w = a;
  int r = 0;
  for (int col = 0; col < w.cols() && r < w.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < w.rows(); ++i)
      if (!w.at(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < w.cols(); ++j) std::swap(w.at(pivot, j), w.at(r, j));
    const Rational p = w.at(r, col);
    for (int i = r + 1; i < w.rows(); ++i) {
      if (w.at(i, col).is_zero()) continue;
      const Rational f = w.at(i, col) / p;
      for (int j = col; j < w.cols(); ++j) w.at(i, j) -= f * w.at(r, j);
    }
    ++r;
  }
  return r;
}

Polynomial charpoly(const Matrix& a) {
  if (!a.is_square()) throw NotSquare("characteristic polynomial needs a square matrix");
  const int n = a.rows();

  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
  // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
  coeffs[static_cast<size_t>(n)] = Rational(1);
  Matrix m = a;
  coeffs[static_cast<size_t>(n - 1)] = -trace(m);
  for (int k = 2; k <= n; ++k) {
    Matrix shifted = m;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += coeffs[static_cast<size_t>(n - k + 1)];
    m = a * shifted;
    coeffs[static_cast<size_t>(n - k)] = -(trace(m) / Rational(k));
  }
  return Polynomial(std::move(coeffs));
}

Matrix polyeval(const Polynomial& p, const Matrix& a) {
  if (!a.is_square()) throw NotSquare("polynomial evaluation needs a square matrix");
  const int n = a.rows();
  Matrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * a;
    const Rational c = p.coeff(k);
    if (!c.is_zero())
      for (int i = 0; i < n; ++i) acc.at(i, i) += c;
  }
  return acc;
}

JordanPair reversing_jordan(int n) {
  if (n < 1) throw InvalidDimension("reversing_jordan needs n >= 1");
  const int plus = (n + 1) / 2;

  Matrix j = Matrix::identity(plus);
  if (n / 2 > 0) j = paste_blocks(j, -Matrix::identity(n / 2));

  // Palindromic columns ascending, antipalindromic descending: that order
  // makes P symmetric (ascending order does not once n >= 4).
  Matrix p(n, n);
  int col = 0;
  for (const Vector& u : palindromic_basis(n).members) {
    for (int i = 0; i < n; ++i) p.at(i, col) = u[i];
    ++col;
  }
  const auto anti = antipalindromic_basis(n).members;
  for (auto it = anti.rbegin(); it != anti.rend(); ++it) {
    for (int i = 0; i < n; ++i) p.at(i, col) = (*it)[i];
    ++col;
  }
  return JordanPair{std::move(j), std::move(p)};
}

std::pair<Matrix, Matrix> jordan_transport(const Matrix& p, const Matrix& j) {
  if (!p.is_square() || !j.is_square() || p.rows() != j.rows())
    throw ShapeError("jordan_transport needs square P, J of equal size");
  const Matrix p_inv = inverse(p);  // Singular if P is not invertible
  const Matrix lhs = reverse_full(p * j * p_inv);
  const Matrix q = reverse_cols(p);
  const Matrix rhs = q * j * inverse(q);
  return {lhs, rhs};
}

}  // namespace pastrev
