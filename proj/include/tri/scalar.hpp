#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <type_traits>

#include "tri/gfp.hpp"
#include "tri/quaternion.hpp"
#include "tri/rational.hpp"

namespace tri {

// Runtime descriptor of the scalar ring a computation lives in. All
// matrices in one computation share one ring.
enum class RingTag { Rational, PrimeField, Quaternion };

struct ScalarRing {
  RingTag tag = RingTag::Rational;
  std::uint64_t characteristic = 0;  // 0 or p

  static ScalarRing rational() { return {RingTag::Rational, 0}; }
  static ScalarRing prime_field(std::uint64_t p) { return {RingTag::PrimeField, p}; }
  static ScalarRing quaternion() { return {RingTag::Quaternion, 0}; }

  bool operator==(const ScalarRing&) const = default;

  std::string name() const {
    switch (tag) {
      case RingTag::Rational: return "rational";
      case RingTag::PrimeField: return "gfp:" + std::to_string(characteristic);
      case RingTag::Quaternion: return "quaternion";
    }
    return "?";
  }
};

// Compile-time view of a scalar type: commutativity, centrality, and the
// coordinatization over the center used by span/commutant computations
// (fields coordinatize over themselves, quaternions over Q in 4 coords).
template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool commutative = true;
  static constexpr int coord_dim = 1;
  using coord_field = Rational;

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_central(const Rational&) { return true; }
  static Rational inv(const Rational& x) { return rat_inv(x); }
  static std::array<Rational, 1> to_coords(const Rational& x) { return {x}; }
  static Rational from_coords(const std::array<Rational, 1>& c) { return c[0]; }
  static int compare(const Rational& x, const Rational& y) { return cmp(x, y); }
  static std::string str(const Rational& x) { return to_string(x); }
  static Rational parse(const std::string& s) { return parse_rational(s); }
};

template <>
struct scalar_traits<GfElem> {
  static constexpr bool commutative = true;
  static constexpr int coord_dim = 1;
  using coord_field = GfElem;

  static GfElem zero() { return GfElem(); }
  static GfElem one() { return GfElem(1); }
  static GfElem from_int(long v) { return GfElem(v); }
  static bool is_zero(const GfElem& x) { return x.residue() == 0; }
  static bool is_central(const GfElem&) { return true; }
  static GfElem inv(const GfElem& x) { return x.inv(); }
  static std::array<GfElem, 1> to_coords(const GfElem& x) { return {x}; }
  static GfElem from_coords(const std::array<GfElem, 1>& c) { return c[0]; }
  static int compare(const GfElem& x, const GfElem& y) {
    return x.residue() < y.residue() ? -1 : (x.residue() > y.residue() ? 1 : 0);
  }
  static std::string str(const GfElem& x) { return to_string(x); }
  static GfElem parse(const std::string& s) { return parse_gf(s); }
};

template <>
struct scalar_traits<Quaternion> {
  static constexpr bool commutative = false;
  static constexpr int coord_dim = 4;
  using coord_field = Rational;

  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() { return Quaternion(1); }
  static Quaternion from_int(long v) { return Quaternion(v); }
  static bool is_zero(const Quaternion& x) { return x.is_zero(); }
  static bool is_central(const Quaternion& x) { return x.is_central(); }
  static Quaternion inv(const Quaternion& x) { return x.inv(); }
  static std::array<Rational, 4> to_coords(const Quaternion& x) {
    return {x.a, x.b, x.c, x.d};
  }
  static Quaternion from_coords(const std::array<Rational, 4>& c) {
    return {c[0], c[1], c[2], c[3]};
  }
  static int compare(const Quaternion& x, const Quaternion& y) {
    return x < y ? -1 : (y < x ? 1 : 0);
  }
  static std::string str(const Quaternion& x) { return to_string(x); }
  static Quaternion parse(const std::string& s) { return parse_quaternion(s); }
};

template <class K>
bool is_central(const K& x) {
  return scalar_traits<K>::is_central(x);
}

template <class K>
std::uint64_t ring_characteristic() {
  if constexpr (std::is_same_v<K, GfElem>) return GfContext::modulus();
  return 0;
}

}  // namespace tri
