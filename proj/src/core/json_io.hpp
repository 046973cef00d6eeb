#pragma once

#include <json.hpp>

#include <string>

#include "linalg.hpp"
#include "matrix.hpp"
#include "vector.hpp"

namespace pastrev {

// Wire formats (rationals travel as canonical "p" / "p/q" strings so no host
// JSON library can lose precision; integer JSON numbers are accepted on
// input):
//   Vector     {"data": ["1", "1/2", ...]}
//   Matrix     {"rows": n, "cols": m, "data": [["1", ...], ...]}
//   Polynomial {"coeffs": ["c0", "c1", ...]}   ascending
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& a);
Json to_json(const Polynomial& p);

Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);

/// Parse helpers over raw text; syntax errors carry 1-based line/column,
/// structural errors carry the offending path in the message.
Vector parse_vector(const std::string& text);
Matrix parse_matrix(const std::string& text);
Polynomial parse_polynomial(const std::string& text);

/// Parses raw text into a JSON document, translating syntax failures into
/// ParseError with line/column.
Json parse_document(const std::string& text);

std::string dump(const Json& j, int indent = -1);

}  // namespace pastrev
