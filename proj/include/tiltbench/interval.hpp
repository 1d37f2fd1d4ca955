#pragma once

#include "tiltbench/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiltbench {

// Closed interval with exact rational endpoints. Degenerate intervals
// (lo == hi) represent exactly-known rationals; everything irrational in the
// toolkit (root enclosures, phases, alpha recovered from alpha^2) lives here.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational point) : lo(point), hi(std::move(point)) {}
  RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }

  // Certain sign: +1 if lo > 0, -1 if hi < 0, 0 when the interval straddles
  // or touches zero (sign not yet decided at this width).
  int sign_certain() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
  }

  bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
};

inline RationalInterval operator-(const RationalInterval& a) {
  return {-a.hi, -a.lo};
}

inline RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

inline RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline RationalInterval operator*(const Rational& c, const RationalInterval& a) {
  if (c >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

inline RationalInterval operator+(const RationalInterval& a, const Rational& c) {
  return {a.lo + c, a.hi + c};
}

inline RationalInterval operator-(const RationalInterval& a, const Rational& c) {
  return {a.lo - c, a.hi - c};
}

// Division requires the divisor to exclude zero.
inline RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by zero-straddling interval");
  const RationalInterval inv{Rational(1) / b.hi, Rational(1) / b.lo};
  return a * inv;
}

inline RationalInterval cube(const RationalInterval& a) {
  // x^3 is monotone, no case split needed
  return {a.lo * a.lo * a.lo, a.hi * a.hi * a.hi};
}

inline RationalInterval square(const RationalInterval& a) {
  if (a.lo >= 0) return {a.lo * a.lo, a.hi * a.hi};
  if (a.hi <= 0) return {a.hi * a.hi, a.lo * a.lo};
  return {Rational(0), std::max(a.lo * a.lo, a.hi * a.hi)};
}

}  // namespace tiltbench
