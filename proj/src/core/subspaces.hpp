#pragma once

#include <string_view>
#include <vector>

#include "matrix.hpp"

namespace pastrev {

/// The projectors (A +- reverse(A, axis))/2 onto the palindromic /
/// antipalindromic subspaces along an axis. The pair sums to A and its
/// difference is the axis reversal of A.
Matrix palindromic_part(const Matrix& a, Axis axis);
Matrix antipalindromic_part(const Matrix& a, Axis axis);

/// The four joint projections. Component xy is palindromic (x=p) or
/// antipalindromic (x=a) along columns (the K^n factor) and likewise along
/// rows (the K^m factor) for y. pp + pa + ap + aa == A.
struct QuadParts {
  Matrix pp, pa, ap, aa;
};
QuadParts quad_decompose(const Matrix& a);

struct MatrixClass {
  bool row_palindromic = false;
  bool row_antipalindromic = false;
  bool col_palindromic = false;
  bool col_antipalindromic = false;
  bool full_palindromic = false;
  bool full_antipalindromic = false;
};
MatrixClass classify(const Matrix& a);

// Subspaces of n x m matrices fixed (or negated) by the reversals.
// WpR/WaR: every row palindromic/antipalindromic; WpC/WaC: every column;
// Wpp..Waa: joint column/row parity; PA/APA: fixed/negated by the full
// reversal. Dimensions follow ceil/floor(n/2), ceil/floor(m/2) products
// (n*ceil(m/2), ..., ceil(nm/2), floor(nm/2)).
enum class SubspaceKind { WpR, WaR, WpC, WaC, Wpp, Wpa, Wap, Waa, PA, APA };

std::string_view subspace_kind_name(SubspaceKind kind);

struct MatrixBasis {
  int rows = 0, cols = 0;
  std::vector<Matrix> members;
  int count() const { return static_cast<int>(members.size()); }
};

MatrixBasis subspace_basis(int n, int m, SubspaceKind kind);

/// The member count formula for a subspace kind.
int subspace_dimension(int n, int m, SubspaceKind kind);

}  // namespace pastrev
