#include "tiltbench/rational.hpp"

#include <cctype>
#include <sstream>

namespace tiltbench {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  if (n < 2) return n;
  Int x = Int(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / 2 + 1);
  for (;;) {
    Int y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Int num = numerator(q);
  const Int den = denominator(q);
  const Int rn = isqrt(num);
  if (rn * rn != num) return std::nullopt;
  const Int rd = isqrt(den);
  if (rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    pos = 1;
  }
  const std::string body = s.substr(pos);
  if (body.empty()) throw std::invalid_argument("bad rational literal: " + text);

  Rational value;
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("bad rational literal: " + text);
    const Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    value = Rational(Int(num), d);
  } else if (const auto dot = body.find('.'); dot != std::string::npos) {
    const std::string ip = body.substr(0, dot);
    const std::string fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp))
      throw std::invalid_argument("bad rational literal: " + text);
    Int scale(1);
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    const Int whole = ip.empty() ? Int(0) : Int(ip);
    value = Rational(whole * scale + Int(fp), scale);
  } else {
    if (!all_digits(body)) throw std::invalid_argument("bad rational literal: " + text);
    value = Rational(Int(body));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << '/' << denominator(q);
  return out.str();
}

std::string to_decimal_string(const Rational& q, int digits) {
  Int scale(1);
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up: floor((2p + q) / 2q)
  Int rounded = floor_div(2 * numerator(q) * scale + denominator(q), 2 * denominator(q));
  const bool neg = rounded < 0;
  Int mag = neg ? Int(-rounded) : rounded;
  Int whole = mag / scale;
  Int frac = mag % scale;
  std::ostringstream out;
  if (neg && (whole != 0 || frac != 0)) out << '-';
  out << whole;
  if (digits > 0) {
    std::ostringstream f;
    f << frac;
    std::string fs = f.str();
    fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
    while (!fs.empty() && fs.back() == '0') fs.pop_back();
    if (!fs.empty()) out << '.' << fs;
  }
  return out.str();
}

}  // namespace tiltbench
