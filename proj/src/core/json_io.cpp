#include "json_io.hpp"

namespace pastrev {

namespace {

Rational rational_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_number_integer())
      return Rational(mpz_class(std::to_string(j.get<long long>())), mpz_class(1));
    if (j.is_number_unsigned())
      return Rational(mpz_class(std::to_string(j.get<unsigned long long>())), mpz_class(1));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ": expected a rational string or integer, got " +
                   std::string(j.type_name()));
}

const Json& require_field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + ": missing field '" + key + "'");
  return *it;
}

int require_dim(const Json& j, const char* key, const std::string& what) {
  const Json& field = require_field(j, key, what);
  if (!field.is_number_integer() && !field.is_number_unsigned())
    throw ParseError(what + ": field '" + key + "' must be an integer");
  const long long v = field.get<long long>();
  if (v < 1) throw ParseError(what + ": field '" + key + "' must be >= 1");
  return static_cast<int>(v);
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vector& v) {
  Json data = Json::array();
  for (int i = 0; i < v.size(); ++i) data.push_back(v[i].str());
  return Json{{"data", std::move(data)}};
}

Json to_json(const Matrix& a) {
  Json data = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).str());
    data.push_back(std::move(row));
  }
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

Json to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(c.str());
  return Json{{"coeffs", std::move(coeffs)}};
}

Vector vector_from_json(const Json& j) {
  const Json& data = require_field(j, "data", "vector");
  if (!data.is_array() || data.empty())
    throw ParseError("vector: 'data' must be a non-empty array");
  std::vector<Rational> entries;
  entries.reserve(data.size());
  for (size_t i = 0; i < data.size(); ++i)
    entries.push_back(rational_from_json(data[i], "vector data[" + std::to_string(i) + "]"));
  return Vector(std::move(entries));
}

Matrix matrix_from_json(const Json& j) {
  const int rows = require_dim(j, "rows", "matrix");
  const int cols = require_dim(j, "cols", "matrix");
  const Json& data = require_field(j, "data", "matrix");
  if (!data.is_array() || data.size() != static_cast<size_t>(rows))
    throw ParseError("matrix: 'data' must be an array of " + std::to_string(rows) + " rows");
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
  for (int i = 0; i < rows; ++i) {
    const Json& row = data[static_cast<size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<size_t>(cols))
      throw ParseError("matrix: data[" + std::to_string(i) + "] must be an array of " +
                       std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k)
      entries.push_back(rational_from_json(
          row[static_cast<size_t>(k)],
          "matrix data[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  return Matrix(rows, cols, std::move(entries));
}

Polynomial polynomial_from_json(const Json& j) {
  const Json& coeffs = require_field(j, "coeffs", "polynomial");
  if (!coeffs.is_array()) throw ParseError("polynomial: 'coeffs' must be an array");
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    out.push_back(rational_from_json(coeffs[i], "polynomial coeffs[" + std::to_string(i) + "]"));
  return Polynomial(std::move(out));
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based; map it to line/column for the diagnostic.
    int line = 1, column = 1;
    const size_t stop = e.byte == 0 ? 0 : std::min(text.size(), e.byte - 1);
    for (size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
  }
}

Vector parse_vector(const std::string& text) { return vector_from_json(parse_document(text)); }
Matrix parse_matrix(const std::string& text) { return matrix_from_json(parse_document(text)); }
Polynomial parse_polynomial(const std::string& text) {
  return polynomial_from_json(parse_document(text));
}

std::string dump(const Json& j, int indent) { return j.dump(indent); }

}  // namespace pastrev
