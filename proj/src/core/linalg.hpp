#pragma once

#include <utility>
#include <vector>

#include "matrix.hpp"

namespace pastrev {

/// Polynomial over the rationals, ascending coefficients, normalized so the
/// leading coefficient is nonzero. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational c);
  static Polynomial monomial(int degree, Rational c = Rational(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

 private:
  std::vector<Rational> coeffs_;
};

/// Exact determinant by fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix.
Rational determinant(const Matrix& a);

/// Exact inverse by Gauss-Jordan elimination; throws Singular.
Matrix inverse(const Matrix& a);

/// Transpose of the cofactor matrix; defined for singular input too.
/// A * adjugate(A) = det(A) * I.
Matrix adjugate(const Matrix& a);

Rational trace(const Matrix& a);
int rank(const Matrix& a);

/// Monic characteristic polynomial det(lambda*I - A) by the
/// Faddeev-LeVerrier recurrence.
Polynomial charpoly(const Matrix& a);

/// Sum of coeff(k) * A^k with A^0 = I.
Matrix polyeval(const Polynomial& p, const Matrix& a);

/// Eigenstructure of the exchange matrix: J = diag(I_ceil(n/2), -I_floor(n/2))
/// and the symmetric P whose columns are the palindromic basis members
/// followed by the antipalindromic ones; P J P^-1 equals the exchange matrix.
struct JordanPair {
  Matrix j, p;
};
JordanPair reversing_jordan(int n);

/// Returns (reverse_full(P J P^-1), reverse_cols(P) J reverse_cols(P)^-1);
/// the two sides agree, i.e. the similarity transports through Reversing.
std::pair<Matrix, Matrix> jordan_transport(const Matrix& p, const Matrix& j);

}  // namespace pastrev
