#pragma once

#include "tiltbench/interval.hpp"
#include "tiltbench/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace tiltbench {

// Univariate polynomial with exact rational coefficients, ascending degree
// order, trailing zeros stripped. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(Rational c);
  // x^k with coefficient c
  static Poly monomial(Rational c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const;
  Rational coefficient(std::size_t k) const;

  Rational eval(const Rational& x) const;
  RationalInterval eval(const RationalInterval& x) const;
  int sign_at(const Rational& x) const { return sign(eval(x)); }

  Poly derivative() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  // Euclidean division over the rationals: *this = q * d + r, deg r < deg d.
  struct DivResult {
    Poly quotient;
    Poly remainder;
  };
  DivResult divmod(const Poly& d) const;

  // Monic gcd over the rationals (gcd of anything with 0 is the other input).
  static Poly gcd(const Poly& a, const Poly& b);

  // this / gcd(this, this'): same roots, all simple.
  Poly squarefree_part() const;

  // Yun decomposition: factors[k-1] collects the roots of multiplicity k
  // (factors may be constant 1 when no root of that multiplicity exists).
  std::vector<Poly> squarefree_decomposition() const;

  // Divides out the rational content and normalizes the leading coefficient
  // to be positive; keeps Sturm remainders from ballooning.
  Poly primitive_part() const;

  // Cauchy bound: every real root lies in (-M, M).
  Rational root_bound() const;

  std::string to_string() const;  // human-readable, for diagnostics

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

}  // namespace tiltbench
