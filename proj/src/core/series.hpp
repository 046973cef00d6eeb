#pragma once

#include <string>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"

namespace pastrev {

/// A finite list of exact series coefficients: either a polynomial or a
/// named series truncated at a fixed order (e.g. exp with a_k = 1/k!).
/// Every evaluation is an exact partial sum in Q.
class SeriesSpec {
 public:
  static SeriesSpec polynomial(Polynomial p);
  static SeriesSpec truncated_exp(int order);

  const std::string& name() const { return name_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval_scalar(const Rational& x) const;

 private:
  SeriesSpec(std::string name, std::vector<Rational> coeffs)
      : name_(std::move(name)), coeffs_(std::move(coeffs)) {}

  std::string name_;
  std::vector<Rational> coeffs_;  // ascending powers
};

/// Sum of coeffs[k] * A^k, exact.
Matrix apply_series(const SeriesSpec& f, const Matrix& a);

/// The three conjugation identities between f and the reversals:
///   id_full: f(R(A))   == R(f(A))
///   id_rc:   f(R_r(A)) == R(f(R_c(A)))
///   id_cr:   f(R_c(A)) == R(f(R_r(A)))
struct ConjugationReport {
  bool id_full = false;
  bool id_rc = false;
  bool id_cr = false;
  bool all() const { return id_full && id_rc && id_cr; }
};
ConjugationReport check_reversing_conjugation(const SeriesSpec& f, const Matrix& a);

/// Requires lambda to be a rational eigenvalue of A (charpoly root), else
/// NotEigenvalue. True iff f(lambda) is an eigenvalue of f(reverse_full(A)),
/// both sides evaluated as partial sums at the same truncation.
bool spectral_mapping_check(const Matrix& a, const Rational& lambda, const SeriesSpec& f);

}  // namespace pastrev
