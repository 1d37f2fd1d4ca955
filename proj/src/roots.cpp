#include "tiltbench/roots.hpp"

#include <algorithm>

namespace tiltbench {

SturmSequence::SturmSequence(const Poly& squarefree) {
  chain_.push_back(squarefree.primitive_part());
  if (squarefree.degree() >= 1) {
    chain_.push_back(squarefree.derivative().primitive_part());
    while (chain_.back().degree() >= 1) {
      Poly rem = chain_[chain_.size() - 2].divmod(chain_.back()).remainder;
      if (rem.is_zero()) break;
      chain_.push_back((-rem).primitive_part());
    }
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int vars = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at(x));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) {
    if (p.is_zero())
      signs.push_back(0);
    else
      signs.push_back(p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading()));
  }
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.is_zero() ? 0 : sign(p.leading()));
  return count_variations(signs);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_all_roots() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

namespace {

// Roots of a squarefree g in (a, b], isolated by Sturm bisection. Exact
// rational roots hit by a bisection point come out degenerate.
void isolate_in(const Poly& g, const SturmSequence& sturm, const Rational& a, const Rational& b,
                int count, std::vector<RationalInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    // single root in (a, b]; check the right endpoint for exactness
    if (g.sign_at(b) == 0) {
      out.emplace_back(b);
      return;
    }
    out.emplace_back(a, b);
    return;
  }
  const Rational m = (a + b) / 2;
  const int left = sturm.count_roots(a, m);
  isolate_in(g, sturm, a, m, left, out);
  isolate_in(g, sturm, m, b, count - left, out);
}

RationalInterval bisect_to_width(const Poly& g, RationalInterval iv, const Rational& width) {
  // invariant: g(iv.lo) * g(iv.hi) < 0
  int lo_sign = g.sign_at(iv.lo);
  while (iv.width() > width) {
    const Rational m = iv.mid();
    const int ms = g.sign_at(m);
    if (ms == 0) return RationalInterval(m);
    if (ms == lo_sign) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Poly& p, const Rational& width) {
  if (p.is_zero()) throw std::domain_error("undefined root set");
  if (width <= 0) throw std::invalid_argument("nonpositive isolation width");
  std::vector<IsolatedRoot> roots;
  if (p.degree() == 0) return roots;

  const std::vector<Poly> squarefree_factors = p.squarefree_decomposition();
  for (std::size_t k = 0; k < squarefree_factors.size(); ++k) {
    const Poly& g = squarefree_factors[k];
    if (g.degree() < 1) continue;
    const SturmSequence sturm(g);
    const Rational bound = g.root_bound();
    std::vector<RationalInterval> isolated;
    isolate_in(g, sturm, -bound, bound, sturm.count_roots(-bound, bound), isolated);
    for (auto& iv : isolated) {
      IsolatedRoot root;
      root.multiplicity = static_cast<int>(k) + 1;
      root.interval = iv.is_point() ? iv : refine_root(g, iv, width);
      roots.push_back(std::move(root));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) {
    return x.interval.lo < y.interval.lo;
  });
  return roots;
}

RationalInterval refine_root(const Poly& p, const RationalInterval& iv, const Rational& width) {
  if (p.is_zero()) throw std::domain_error("undefined root set");
  if (width <= 0) throw std::invalid_argument("nonpositive refinement width");

  if (iv.is_point()) {
    if (p.sign_at(iv.lo) != 0)
      throw std::invalid_argument("degenerate interval is not at a root");
    return iv;
  }

  // A multiple root of p is a simple root of the squarefree part, so the
  // bisection always has a sign change to follow.
  const Poly g = p.squarefree_part();
  const int lo_sign = g.sign_at(iv.lo);
  const int hi_sign = g.sign_at(iv.hi);
  if (lo_sign == 0) return RationalInterval(iv.lo);
  if (hi_sign == 0) return RationalInterval(iv.hi);
  if (lo_sign == hi_sign)
    throw std::invalid_argument("interval does not bracket a sign change of the squarefree part");
  RationalInterval refined = bisect_to_width(g, iv, width);
  return refined;
}

}  // namespace tiltbench
