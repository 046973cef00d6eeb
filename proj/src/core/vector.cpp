#include "vector.hpp"

#include <algorithm>
#include <utility>

namespace pastrev {

Vector::Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidDimension("vector length must be >= 1");
}

Vector Vector::zeros(int n) {
  if (n < 1) throw InvalidDimension("vector length must be >= 1");
  return Vector(std::vector<Rational>(static_cast<size_t>(n)));
}

Vector Vector::unit(int n, int i) {
  if (n < 1) throw InvalidDimension("vector length must be >= 1");
  if (i < 0 || i >= n) throw IndexOutOfRange("unit vector index out of range");
  std::vector<Rational> e(static_cast<size_t>(n));
  e[static_cast<size_t>(i)] = Rational(1);
  return Vector(std::move(e));
}

const Rational& Vector::operator[](int i) const {
  if (i < 0 || i >= size()) throw IndexOutOfRange("vector index out of range");
  return entries_[static_cast<size_t>(i)];
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw LengthMismatch("vector addition needs equal lengths");
  std::vector<Rational> out(a.entries_);
  for (size_t i = 0; i < out.size(); ++i) out[i] += b.entries_[i];
  return Vector(std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw LengthMismatch("vector subtraction needs equal lengths");
  std::vector<Rational> out(a.entries_);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b.entries_[i];
  return Vector(std::move(out));
}

Vector operator*(const Rational& c, const Vector& v) {
  std::vector<Rational> out(v.entries_);
  for (auto& x : out) x *= c;
  return Vector(std::move(out));
}

Vector Vector::operator-() const { return Rational(-1) * *this; }

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

Vector reverse(const Vector& v) {
  std::vector<Rational> out(v.entries().rbegin(), v.entries().rend());
  return Vector(std::move(out));
}

Vector paste(const Vector& v, const Vector& w) {
  std::vector<Rational> out = v.entries();
  out.insert(out.end(), w.entries().begin(), w.entries().end());
  return Vector(std::move(out));
}

Vector embed_left(const Vector& v, int trailing_zeros) {
  if (trailing_zeros < 0) throw InvalidDimension("padding must be >= 0");
  std::vector<Rational> out = v.entries();
  out.resize(out.size() + static_cast<size_t>(trailing_zeros));
  return Vector(std::move(out));
}

Vector embed_right(const Vector& w, int leading_zeros) {
  if (leading_zeros < 0) throw InvalidDimension("padding must be >= 0");
  std::vector<Rational> out(static_cast<size_t>(leading_zeros));
  out.insert(out.end(), w.entries().begin(), w.entries().end());
  return Vector(std::move(out));
}

Rational dot(const Vector& v, const Vector& w) {
  if (v.size() != w.size()) throw LengthMismatch("dot product needs equal lengths");
  Rational acc;
  for (int i = 0; i < v.size(); ++i) acc += v[i] * w[i];
  return acc;
}

Vector cross3(const Vector& v, const Vector& w) {
  if (v.size() != 3 || w.size() != 3)
    throw LengthMismatch("cross product is defined on K^3");
  return Vector({v[1] * w[2] - v[2] * w[1],
                 v[2] * w[0] - v[0] * w[2],
                 v[0] * w[1] - v[1] * w[0]});
}

Vector palindromic_part(const Vector& v) {
  return Rational(1, 2) * (v + reverse(v));
}

Vector antipalindromic_part(const Vector& v) {
  return Rational(1, 2) * (v - reverse(v));
}

VectorClass classify(const Vector& v) {
  VectorClass c;
  c.palindromic = (reverse(v) == v);
  c.antipalindromic = (reverse(v) == -v);
  return c;
}

VectorBasis palindromic_basis(int n) {
  if (n < 1) throw InvalidDimension("ambient dimension must be >= 1");
  VectorBasis basis;
  basis.dim_ambient = n;
  for (int i = 0; i < n / 2; ++i)
    basis.members.push_back(Vector::unit(n, i) + Vector::unit(n, n - 1 - i));
  if (n % 2 == 1) basis.members.push_back(Vector::unit(n, n / 2));
  return basis;
}

VectorBasis antipalindromic_basis(int n) {
  if (n < 1) throw InvalidDimension("ambient dimension must be >= 1");
  VectorBasis basis;
  basis.dim_ambient = n;
  for (int i = 0; i < n / 2; ++i)
    basis.members.push_back(Vector::unit(n, i) - Vector::unit(n, n - 1 - i));
  return basis;
}

}  // namespace pastrev
