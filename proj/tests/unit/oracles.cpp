#include "oracles.hpp"

#include <vector>

namespace oracle {

using pastrev::Matrix;
using pastrev::Rational;
using pastrev::SubspaceKind;

Rational det_cofactor(const Matrix& a) {
  const int n = a.rows();
  if (n == 1) return a.at(0, 0);
  Rational acc;
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j).is_zero()) continue;
    Matrix sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int col = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        sub.at(i - 1, col) = a.at(i, k);
        ++col;
      }
    }
    const Rational term = a.at(0, j) * det_cofactor(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

int rank_elimination(Matrix a) {
  int r = 0;
  std::vector<bool> used(static_cast<size_t>(a.rows()), false);
  for (int col = 0; col < a.cols(); ++col) {
    int pivot = -1;
    for (int i = a.rows() - 1; i >= 0; --i) {  // bottom-up pivot choice
      if (!used[static_cast<size_t>(i)] && !a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    used[static_cast<size_t>(pivot)] = true;
    ++r;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == pivot || a.at(i, col).is_zero()) continue;
      const Rational f = a.at(i, col) / a.at(pivot, col);
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(pivot, j);
    }
  }
  return r;
}

Matrix operator_matrix(int n, int m,
                       const std::function<Matrix(const Matrix&)>& op) {
  const int dim = n * m;
  Matrix out(dim, dim);
  for (int k = 0; k < dim; ++k) {
    Matrix unit(n, m);
    unit.at(k / m, k % m) = Rational(1);
    const Matrix image = op(unit);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) out.at(i * m + j, k) = image.at(i, j);
  }
  return out;
}

namespace {

Matrix stack_vertical(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

Matrix reversal_constraint(int n, int m, pastrev::Axis axis, int sign) {
  Matrix constraint = operator_matrix(
      n, m, [axis](const Matrix& x) { return pastrev::reverse(x, axis); });
  for (int k = 0; k < n * m; ++k) constraint.at(k, k) -= Rational(sign);
  return constraint;
}

}  // namespace

int subspace_dim_nullspace(int n, int m, SubspaceKind kind) {
  using pastrev::Axis;
  const int dim = n * m;
  switch (kind) {
    case SubspaceKind::WpR:
      return dim - rank_elimination(reversal_constraint(n, m, Axis::Rows, 1));
    case SubspaceKind::WaR:
      return dim - rank_elimination(reversal_constraint(n, m, Axis::Rows, -1));
    case SubspaceKind::WpC:
      return dim - rank_elimination(reversal_constraint(n, m, Axis::Cols, 1));
    case SubspaceKind::WaC:
      return dim - rank_elimination(reversal_constraint(n, m, Axis::Cols, -1));
    case SubspaceKind::Wpp:
      return dim - rank_elimination(stack_vertical(reversal_constraint(n, m, Axis::Rows, 1),
                                                   reversal_constraint(n, m, Axis::Cols, 1)));
    case SubspaceKind::Wpa:
      return dim - rank_elimination(stack_vertical(reversal_constraint(n, m, Axis::Rows, -1),
                                                   reversal_constraint(n, m, Axis::Cols, 1)));
    case SubspaceKind::Wap:
      return dim - rank_elimination(stack_vertical(reversal_constraint(n, m, Axis::Rows, 1),
                                                   reversal_constraint(n, m, Axis::Cols, -1)));
    case SubspaceKind::Waa:
      return dim - rank_elimination(stack_vertical(reversal_constraint(n, m, Axis::Rows, -1),
                                                   reversal_constraint(n, m, Axis::Cols, -1)));
    case SubspaceKind::PA:
      return dim - rank_elimination(reversal_constraint(n, m, Axis::Full, 1));
    case SubspaceKind::APA:
      return dim - rank_elimination(reversal_constraint(n, m, Axis::Full, -1));
  }
  return -1;
}

int vector_palindromic_dim(int n) {
  Matrix constraint = pastrev::reversing_matrix(n);
  for (int i = 0; i < n; ++i) constraint.at(i, i) -= Rational(1);
  return n - rank_elimination(constraint);
}

int vector_antipalindromic_dim(int n) {
  Matrix constraint = pastrev::reversing_matrix(n);
  for (int i = 0; i < n; ++i) constraint.at(i, i) += Rational(1);
  return n - rank_elimination(constraint);
}

}  // namespace oracle
