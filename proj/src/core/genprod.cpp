#include "genprod.hpp"

namespace pastrev {

Matrix minor_matrix(const Matrix& m, int k) {
  if (m.cols() < 2) throw ShapeError("minor_matrix needs at least two columns");
  if (k < 1 || k > m.cols()) throw IndexOutOfRange("minor column index out of range");
  Matrix out(m.rows(), m.cols() - 1);
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j)
      out.at(i, j) = m.at(i, j < k - 1 ? j : j + 1);
  return out;
}

Vector generalized_product(const std::vector<Vector>& vs) {
  if (vs.empty()) throw ShapeError("generalized product needs n-1 >= 1 vectors");
  const int n = static_cast<int>(vs.size()) + 1;
  for (const Vector& v : vs)
    if (v.size() != n)
      throw ShapeError("generalized product needs n-1 vectors of length n");

  Matrix stack(n - 1, n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n; ++j) stack.at(i, j) = vs[static_cast<size_t>(i)][j];

  std::vector<Rational> out(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Rational d = determinant(minor_matrix(stack, k));
    if (k % 2 == 0) d = -d;
    out[static_cast<size_t>(k - 1)] = std::move(d);
  }
  return Vector(std::move(out));
}

}  // namespace pastrev
