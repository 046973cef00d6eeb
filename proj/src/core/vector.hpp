#pragma once

#include <vector>

#include "rational.hpp"

namespace pastrev {

/// Finite ordered sequence of rationals, length >= 1. Immutable once built.
class Vector {
 public:
  explicit Vector(std::vector<Rational> entries);

  static Vector zeros(int n);
  static Vector unit(int n, int i);  // 0-based i

  int size() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](int i) const;
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Rational& c, const Vector& v);
  Vector operator-() const;

  bool is_zero() const;

 private:
  std::vector<Rational> entries_;
};

Vector reverse(const Vector& v);
Vector paste(const Vector& v, const Vector& w);

// The embeddings of the pasting factorization: embed_left pads with trailing
// zeros, embed_right with leading zeros, and
// paste(v, w) == embed_left(v, w.size()) + embed_right(w, v.size()).
Vector embed_left(const Vector& v, int trailing_zeros);
Vector embed_right(const Vector& w, int leading_zeros);

Rational dot(const Vector& v, const Vector& w);
Vector cross3(const Vector& v, const Vector& w);

/// The projectors (v + reverse(v))/2 and (v - reverse(v))/2.
Vector palindromic_part(const Vector& v);
Vector antipalindromic_part(const Vector& v);

struct VectorClass {
  bool palindromic = false;
  bool antipalindromic = false;  // both hold only for the zero vector
};
VectorClass classify(const Vector& v);

struct VectorBasis {
  int dim_ambient = 0;
  std::vector<Vector> members;
  int count() const { return static_cast<int>(members.size()); }
};

// Canonical bases of the palindromic / antipalindromic subspaces of K^n:
// e_i + e_{n+1-i} (resp. e_i - e_{n+1-i}) for i < n+1-i, ascending i, with
// the middle unit vector appended for odd n in the palindromic case.
// Counts are ceil(n/2) and floor(n/2).
VectorBasis palindromic_basis(int n);
VectorBasis antipalindromic_basis(int n);

}  // namespace pastrev
