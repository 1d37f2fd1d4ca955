#pragma once

#include "tiltbench/interval.hpp"
#include "tiltbench/poly.hpp"

#include <vector>

namespace tiltbench {

// Default certification width 2^-128: far below every identity tolerance
// used downstream, still cheap for the cubics this toolkit lives on.
inline constexpr int kDefaultWidthExponent = 128;

struct IsolatedRoot {
  RationalInterval interval;  // degenerate iff the root is rational
  int multiplicity = 1;
};

// Sturm sequence of a squarefree polynomial; counts distinct real roots
// exactly, with no floating point anywhere.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& squarefree);

  // Number of roots in the half-open interval (a, b], a <= b.
  int count_roots(const Rational& a, const Rational& b) const;
  // Number of real roots overall.
  int count_all_roots() const;

 private:
  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  std::vector<Poly> chain_;
};

// sign of p(x), exactly.
inline int sign_at(const Poly& p, const Rational& x) { return p.sign_at(x); }

// Isolating intervals for all distinct real roots, sorted ascending, each
// certified to contain exactly one root; rational roots come back as
// degenerate intervals, and every interval is refined below `width`.
// Multiple roots are reported once with their multiplicity.
// Throws std::domain_error("undefined root set") on the zero polynomial.
std::vector<IsolatedRoot> isolate_real_roots(const Poly& p,
                                             const Rational& width = pow2(-kDefaultWidthExponent));

// Bisection with exact sign evaluation. `iv` must isolate exactly one root of
// p (sign change of the squarefree part, or a degenerate interval at a root).
RationalInterval refine_root(const Poly& p, const RationalInterval& iv, const Rational& width);

}  // namespace tiltbench
