#include "series.hpp"

namespace pastrev {

SeriesSpec SeriesSpec::polynomial(Polynomial p) {
  return SeriesSpec("polynomial", p.coeffs());
}

SeriesSpec SeriesSpec::truncated_exp(int order) {
  if (order < 0) throw InvalidDimension("truncation order must be >= 0");
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<size_t>(order) + 1);
  Rational factorial(1);
  coeffs.push_back(Rational(1));
  for (int k = 1; k <= order; ++k) {
    factorial *= Rational(k);
    coeffs.push_back(Rational(1) / factorial);
  }
  return SeriesSpec("exp[" + std::to_string(order) + "]", std::move(coeffs));
}

Rational SeriesSpec::eval_scalar(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix apply_series(const SeriesSpec& f, const Matrix& a) {
  if (!a.is_square()) throw NotSquare("series evaluation needs a square matrix");
  const int n = a.rows();
  Matrix acc(n, n);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * a;
    if (!it->is_zero())
      for (int i = 0; i < n; ++i) acc.at(i, i) += *it;
  }
  return acc;
}

ConjugationReport check_reversing_conjugation(const SeriesSpec& f, const Matrix& a) {
  if (!a.is_square()) throw NotSquare("conjugation check needs a square matrix");
  ConjugationReport report;
  report.id_full = (apply_series(f, reverse_full(a)) == reverse_full(apply_series(f, a)));
  report.id_rc =
      (apply_series(f, reverse_rows(a)) == reverse_full(apply_series(f, reverse_cols(a))));
  report.id_cr =
      (apply_series(f, reverse_cols(a)) == reverse_full(apply_series(f, reverse_rows(a))));
  return report;
}

bool spectral_mapping_check(const Matrix& a, const Rational& lambda, const SeriesSpec& f) {
  if (!a.is_square()) throw NotSquare("spectral check needs a square matrix");
  if (!charpoly(a).eval(lambda).is_zero())
    throw NotEigenvalue("lambda is not an eigenvalue of the matrix");
  const Matrix image = apply_series(f, reverse_full(a));
  return charpoly(image).eval(f.eval_scalar(lambda)).is_zero();
}

}  // namespace pastrev
