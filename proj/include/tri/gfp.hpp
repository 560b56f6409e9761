#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "tri/rational.hpp"

namespace tri {

// Prime modulus shared by every GfElem in the current computation.
// NTL-style context: set once per computation (thread-local), elements
// store only their residue. Prevents mixed-modulus arithmetic.
class GfContext {
 public:
  static void set_modulus(std::uint64_t p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("modulus must be prime");
    modulus_ = p;
  }
  static std::uint64_t modulus() {
    if (modulus_ == 0) throw std::logic_error("GF(p) modulus not set");
    return modulus_;
  }

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  static thread_local std::uint64_t modulus_;
};

inline thread_local std::uint64_t GfContext::modulus_ = 0;

// RAII scope that installs a modulus and restores the previous one.
class GfScope {
 public:
  explicit GfScope(std::uint64_t p) : prev_(current()) { GfContext::set_modulus(p); }
  ~GfScope() { restore(prev_); }
  GfScope(const GfScope&) = delete;
  GfScope& operator=(const GfScope&) = delete;

 private:
  static std::uint64_t current() {
    try {
      return GfContext::modulus();
    } catch (...) {
      return 0;
    }
  }
  static void restore(std::uint64_t p) {
    if (p != 0) GfContext::set_modulus(p);
  }
  std::uint64_t prev_;
};

// Element of GF(p). Residue in [0, p). Supports p up to 10^6 (the CLI cap),
// well inside the 64-bit multiplication overflow limit.
class GfElem {
 public:
  GfElem() : r_(0) {}
  explicit GfElem(std::int64_t v) {
    const std::int64_t p = static_cast<std::int64_t>(GfContext::modulus());
    std::int64_t m = v % p;
    if (m < 0) m += p;
    r_ = static_cast<std::uint64_t>(m);
  }

  std::uint64_t residue() const { return r_; }

  friend GfElem operator+(GfElem a, GfElem b) {
    return from_residue((a.r_ + b.r_) % GfContext::modulus());
  }
  friend GfElem operator-(GfElem a, GfElem b) {
    const std::uint64_t p = GfContext::modulus();
    return from_residue((a.r_ + p - b.r_) % p);
  }
  friend GfElem operator*(GfElem a, GfElem b) {
    return from_residue((a.r_ * b.r_) % GfContext::modulus());
  }
  GfElem operator-() const {
    const std::uint64_t p = GfContext::modulus();
    return from_residue((p - r_) % p);
  }
  GfElem& operator+=(GfElem b) { return *this = *this + b; }
  GfElem& operator-=(GfElem b) { return *this = *this - b; }
  GfElem& operator*=(GfElem b) { return *this = *this * b; }

  GfElem inv() const {
    if (r_ == 0) throw DivisionByZero();
    // extended Euclid
    std::int64_t p = static_cast<std::int64_t>(GfContext::modulus());
    std::int64_t a = static_cast<std::int64_t>(r_), m = p, x0 = 0, x1 = 1;
    while (a > 1) {
      std::int64_t q = a / m;
      std::int64_t t = m;
      m = a % m;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    if (x1 < 0) x1 += p;
    return from_residue(static_cast<std::uint64_t>(x1));
  }

  bool operator==(const GfElem& o) const { return r_ == o.r_; }
  bool operator!=(const GfElem& o) const { return r_ != o.r_; }
  bool operator<(const GfElem& o) const { return r_ < o.r_; }

  static GfElem from_residue(std::uint64_t r) {
    GfElem e;
    e.r_ = r;
    return e;
  }

 private:
  std::uint64_t r_;
};

inline std::string to_string(const GfElem& e) { return std::to_string(e.residue()); }

inline GfElem parse_gf(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty GF(p) literal");
  size_t pos = 0;
  long long v;
  try {
    v = std::stoll(s, &pos);
  } catch (...) {
    throw std::invalid_argument("bad GF(p) literal: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("bad GF(p) literal: '" + s + "'");
  return GfElem(v);
}

}  // namespace tri
