#pragma once

#include <array>
#include <string>

#include "tri/rational.hpp"

namespace tri {

// Rational quaternion a + bi + cj + dk. A noncommutative division ring
// with center Q. Components stay rational so Gaussian elimination closes
// over the scalars.
struct Quaternion {
  Rational a, b, c, d;

  Quaternion() : a(0), b(0), c(0), d(0) {}
  Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  explicit Quaternion(const Rational& r) : a(r), b(0), c(0), d(0) {}
  explicit Quaternion(long v) : a(v), b(0), c(0), d(0) {}

  static Quaternion unit_i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
  static Quaternion unit_j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
  static Quaternion unit_k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  Quaternion operator-() const { return {-a, -b, -c, -d}; }

  // i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  Quaternion& operator+=(const Quaternion& y) { return *this = *this + y; }
  Quaternion& operator-=(const Quaternion& y) { return *this = *this - y; }
  Quaternion& operator*=(const Quaternion& y) { return *this = *this * y; }

  Quaternion conj() const { return {a, -b, -c, -d}; }
  Rational norm() const { return a * a + b * b + c * c + d * d; }

  Quaternion inv() const {
    Rational nrm = norm();
    if (nrm == 0) throw DivisionByZero();
    Quaternion cj = conj();
    return {cj.a / nrm, cj.b / nrm, cj.c / nrm, cj.d / nrm};
  }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_central() const { return b == 0 && c == 0 && d == 0; }

  bool operator==(const Quaternion& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Quaternion& o) const { return !(*this == o); }
  bool operator<(const Quaternion& o) const {
    if (int s = cmp(a, o.a)) return s < 0;
    if (int s = cmp(b, o.b)) return s < 0;
    if (int s = cmp(c, o.c)) return s < 0;
    return cmp(d, o.d) < 0;
  }
};

// "a+bi+cj+dk" with rational components, zero terms omitted, e.g. "1/2+k",
// "-i", "3". Throws std::invalid_argument with the offending token.
inline Quaternion parse_quaternion(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty quaternion literal");
  Quaternion q;
  size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    size_t start = pos;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    size_t num_begin = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    std::string coeff = s.substr(num_begin, pos - num_begin);
    char unit = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      unit = s[pos];
      ++pos;
    }
    if (coeff.empty() && unit == 0)
      throw std::invalid_argument("bad quaternion term at '" + s.substr(start) + "'");
    Rational value = coeff.empty() ? Rational(1) : parse_rational(coeff);
    if (start < s.size() && s[start] == '-') value = -value;
    switch (unit) {
      case 0: q.a += value; break;
      case 'i': q.b += value; break;
      case 'j': q.c += value; break;
      case 'k': q.d += value; break;
    }
    any = true;
  }
  if (!any) throw std::invalid_argument("bad quaternion literal: '" + s + "'");
  return q;
}

inline std::string to_string(const Quaternion& q) {
  if (q.is_zero()) return "0";
  std::string out;
  auto term = [&out](const Rational& v, const char* unit) {
    if (v == 0) return;
    std::string t;
    if (*unit && (v == 1 || v == -1)) {
      t = (v == 1) ? std::string(unit) : "-" + std::string(unit);
    } else {
      t = v.get_str() + unit;
    }
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  };
  term(q.a, "");
  term(q.b, "i");
  term(q.c, "j");
  term(q.d, "k");
  return out;
}

}  // namespace tri
