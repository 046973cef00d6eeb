#include "rational.hpp"

#include <cctype>
#include <ostream>

namespace pastrev {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivideByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) throw DivideByZero("rational with zero denominator");
  q_ = mpq_class(std::move(num), std::move(den));
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivideByZero("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational Rational::from_string(std::string_view text) {
  auto fail = [&](const char* why) -> ParseError {
    return ParseError(std::string("invalid rational '") + std::string(text) + "': " + why);
  };

  if (text.empty()) throw fail("empty");
  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }

  auto is_integer_literal = [](std::string_view s, bool sign_ok) {
    if (!s.empty() && sign_ok && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  if (!is_integer_literal(num_part, true)) throw fail("malformed numerator");
  if (num_part.front() == '+') num_part.remove_prefix(1);  // mpz rejects a leading '+'
  mpz_class num(std::string(num_part), 10);
  if (den_part.data() == nullptr) return Rational(mpq_class(std::move(num)));

  if (!is_integer_literal(den_part, false)) throw fail("malformed denominator");
  mpz_class den(std::string(den_part), 10);
  if (sgn(den) == 0) throw fail("zero denominator");
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pastrev
