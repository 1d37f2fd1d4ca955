#include "tiltbench/poly.hpp"

#include <sstream>

namespace tiltbench {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { strip(); }

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Rational c) { return Poly({std::move(c)}); }

Poly Poly::monomial(Rational c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = std::move(c);
  return Poly(std::move(v));
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Poly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalInterval Poly::eval(const RationalInterval& x) const {
  RationalInterval acc{Rational(0)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(Int(k));
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c = -c;
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[k] += o.coeffs_[k];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

Poly::DivResult Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(coeffs_);
  const int dd = d.degree();
  const int dn = degree();
  if (dn < dd) return {Poly(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(dn - dd) + 1, Rational(0));
  for (int k = dn; k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / d.leading();
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= c * d.coefficients()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(dd, 0)));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a.primitive_part();
  Poly y = b.primitive_part();
  while (!y.is_zero()) {
    Poly r = x.divmod(y).remainder.primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading());
}

Poly Poly::squarefree_part() const {
  if (is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  if (degree() == 0) return Poly::constant(Rational(1));
  const Poly g = gcd(*this, derivative());
  if (g.degree() == 0) return primitive_part();
  return divmod(g).quotient.primitive_part();
}

std::vector<Poly> Poly::squarefree_decomposition() const {
  // Yun's algorithm
  if (is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
  std::vector<Poly> out;
  if (degree() == 0) return out;
  Poly f = primitive_part();
  Poly g = gcd(f, f.derivative());
  if (g.degree() == 0) {
    out.push_back(f);
    return out;
  }
  Poly w = f.divmod(g).quotient;
  Poly y = f.derivative().divmod(g).quotient;
  Poly z = y - w.derivative();
  while (!z.is_zero()) {
    Poly d = gcd(w, z);
    out.push_back(d);
    w = w.divmod(d).quotient;
    y = z.divmod(d).quotient;
    z = y - w.derivative();
  }
  out.push_back(w);
  return out;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  Int num_gcd(0);
  Int den_lcm(1);
  for (const auto& c : coeffs_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  }
  Rational scale(den_lcm, num_gcd);
  if (leading() < 0) scale = -scale;
  return *this * scale;
}

Rational Poly::root_bound() const {
  if (is_zero()) throw std::domain_error("root bound of zero polynomial");
  Rational m(0);
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k)
    m = std::max(m, abs(coeffs_[k] / leading()));
  return m + 1;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << " + ";
    out << tiltbench::to_string(coeffs_[k]);
    if (k >= 1) out << "*x";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

}  // namespace tiltbench
