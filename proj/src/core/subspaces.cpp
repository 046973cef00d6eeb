#include "subspaces.hpp"

namespace pastrev {

Matrix palindromic_part(const Matrix& a, Axis axis) {
  return Rational(1, 2) * (a + reverse(a, axis));
}

Matrix antipalindromic_part(const Matrix& a, Axis axis) {
  return Rational(1, 2) * (a - reverse(a, axis));
}

QuadParts quad_decompose(const Matrix& a) {
  const Matrix r = reverse_rows(a);
  const Matrix c = reverse_cols(a);
  const Matrix f = reverse_full(a);
  const Rational quarter(1, 4);
  return QuadParts{
      quarter * (a + r + c + f),  // fixed by both reversals
      quarter * (a - r + c - f),  // fixed by R_c, negated by R_r
      quarter * (a + r - c - f),  // fixed by R_r, negated by R_c
      quarter * (a - r - c + f),  // negated by both
  };
}

MatrixClass classify(const Matrix& a) {
  MatrixClass c;
  const Matrix neg = -a;
  c.row_palindromic = (reverse_rows(a) == a);
  c.row_antipalindromic = (reverse_rows(a) == neg);
  c.col_palindromic = (reverse_cols(a) == a);
  c.col_antipalindromic = (reverse_cols(a) == neg);
  c.full_palindromic = (reverse_full(a) == a);
  c.full_antipalindromic = (reverse_full(a) == neg);
  return c;
}

std::string_view subspace_kind_name(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::WpR: return "Wp_r";
    case SubspaceKind::WaR: return "Wa_r";
    case SubspaceKind::WpC: return "Wp_c";
    case SubspaceKind::WaC: return "Wa_c";
    case SubspaceKind::Wpp: return "Wpp";
    case SubspaceKind::Wpa: return "Wpa";
    case SubspaceKind::Wap: return "Wap";
    case SubspaceKind::Waa: return "Waa";
    case SubspaceKind::PA: return "PA";
    case SubspaceKind::APA: return "aPA";
  }
  return "?";
}

int subspace_dimension(int n, int m, SubspaceKind kind) {
  if (n < 1 || m < 1) throw InvalidDimension("subspace needs n, m >= 1");
  const auto ceil2 = [](int k) { return (k + 1) / 2; };
  const auto floor2 = [](int k) { return k / 2; };
  switch (kind) {
    case SubspaceKind::WpR: return n * ceil2(m);
    case SubspaceKind::WaR: return n * floor2(m);
    case SubspaceKind::WpC: return m * ceil2(n);
    case SubspaceKind::WaC: return m * floor2(n);
    case SubspaceKind::Wpp: return ceil2(n) * ceil2(m);
    case SubspaceKind::Wpa: return ceil2(n) * floor2(m);
    case SubspaceKind::Wap: return floor2(n) * ceil2(m);
    case SubspaceKind::Waa: return floor2(n) * floor2(m);
    case SubspaceKind::PA: return ceil2(n * m);
    case SubspaceKind::APA: return floor2(n * m);
  }
  throw Error("unreachable subspace kind");
}

namespace {

// Matrices with a single basis vector placed in one row (resp. column),
// zero elsewhere; spans the row- (resp. column-) parity subspaces.
MatrixBasis per_row_basis(int n, int m, const VectorBasis& row_space) {
  MatrixBasis basis{n, m, {}};
  for (int i = 0; i < n; ++i)
    for (const Vector& v : row_space.members) {
      Matrix member(n, m);
      for (int j = 0; j < m; ++j) member.at(i, j) = v[j];
      basis.members.push_back(std::move(member));
    }
  return basis;
}

MatrixBasis per_col_basis(int n, int m, const VectorBasis& col_space) {
  MatrixBasis basis{n, m, {}};
  for (int j = 0; j < m; ++j)
    for (const Vector& u : col_space.members) {
      Matrix member(n, m);
      for (int i = 0; i < n; ++i) member.at(i, j) = u[i];
      basis.members.push_back(std::move(member));
    }
  return basis;
}

MatrixBasis outer_basis(int n, int m, const VectorBasis& us, const VectorBasis& vs) {
  MatrixBasis basis{n, m, {}};
  for (const Vector& u : us.members)
    for (const Vector& v : vs.members) basis.members.push_back(outer(u, v));
  return basis;
}

MatrixBasis devectorized_basis(int n, int m, const VectorBasis& flat) {
  MatrixBasis basis{n, m, {}};
  for (const Vector& v : flat.members) basis.members.push_back(devectorize(v, n, m));
  return basis;
}

}  // namespace

MatrixBasis subspace_basis(int n, int m, SubspaceKind kind) {
  if (n < 1 || m < 1) throw InvalidDimension("subspace needs n, m >= 1");
  switch (kind) {
    case SubspaceKind::WpR: return per_row_basis(n, m, palindromic_basis(m));
    case SubspaceKind::WaR: return per_row_basis(n, m, antipalindromic_basis(m));
    case SubspaceKind::WpC: return per_col_basis(n, m, palindromic_basis(n));
    case SubspaceKind::WaC: return per_col_basis(n, m, antipalindromic_basis(n));
    case SubspaceKind::Wpp:
      return outer_basis(n, m, palindromic_basis(n), palindromic_basis(m));
    case SubspaceKind::Wpa:
      return outer_basis(n, m, palindromic_basis(n), antipalindromic_basis(m));
    case SubspaceKind::Wap:
      return outer_basis(n, m, antipalindromic_basis(n), palindromic_basis(m));
    case SubspaceKind::Waa:
      return outer_basis(n, m, antipalindromic_basis(n), antipalindromic_basis(m));
    case SubspaceKind::PA: return devectorized_basis(n, m, palindromic_basis(n * m));
    case SubspaceKind::APA: return devectorized_basis(n, m, antipalindromic_basis(n * m));
  }
  throw Error("unreachable subspace kind");
}

}  // namespace pastrev
