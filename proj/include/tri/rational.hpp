#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tri {

// Exact rational scalar. mpq_class keeps the canonical reduced form
// (gcd(num, den) = 1, den > 0) after every operation, which makes
// structural equality equal mathematical equality.
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero scalar") {}
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_inv(const Rational& x) {
  if (x == 0) throw DivisionByZero();
  return Rational(1) / x;
}

// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument on
// malformed input (including q = 0).
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
          ch == '+' || ch == '/'))
      throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace tri
