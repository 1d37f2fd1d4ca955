#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace tiltbench {

// Exact arbitrary-precision arithmetic. cpp_rational keeps the canonical
// form (positive denominator, reduced fraction) after every operation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline Int abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational r(1);
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// 2^-k as an exact rational, the unit of every certification width.
inline Rational pow2(int k) {
  if (k >= 0) return Rational(Int(1) << k);
  return Rational(1, Int(1) << (-k));
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rational(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

inline Int ceil_rational(const Rational& q) {
  return -floor_rational(-q);
}

// Exact integer square root (floor). Newton iteration on cpp_int.
Int isqrt(const Int& n);

// sqrt(q) as a rational if q is a perfect square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

// Parses "p/q", "p", or decimal strings like "-1.25" into an exact rational.
Rational parse_rational(const std::string& text);

// Canonical emission: "p" for integers, "p/q" otherwise. Reparsing is exact.
std::string to_string(const Rational& q);

// Fixed-point decimal rendering (round-to-nearest) used only for SVG coordinates.
std::string to_decimal_string(const Rational& q, int digits);

}  // namespace tiltbench
