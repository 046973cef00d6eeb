#pragma once

#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"
#include "vector.hpp"

namespace pastrev {

/// Column-k deletion, 1-based k; the generalized product applies it to the
/// (n-1) x n stack of its factors.
Matrix minor_matrix(const Matrix& m, int k);

/// The alternating (n-1)-ary product on K^n built from signed maximal
/// minors: sum_k (-1)^(1+k) det(M^(k)) e_k with M the stack of the inputs.
/// Reduces to the cross product for n = 3.
Vector generalized_product(const std::vector<Vector>& vs);

}  // namespace pastrev
