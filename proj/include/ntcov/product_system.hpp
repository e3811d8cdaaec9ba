#pragma once

// The product system X = ⊔ X_m over the positive integers: each fiber X_m
// is C(T) with right action ξ·f = ξ f(z^m), left action by multiplication
// and inner product <ξ, η>_m = L_m(ξ* η). Compact operators on a fiber are
// finite sums of rank-one operators θ_{ξ,η}(ζ) = ξ·<η, ζ>_m.

#include "ntcov/laurent.hpp"
#include "ntcov/numtheory.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ntcov {

class LevelMismatch : public std::invalid_argument {
 public:
  LevelMismatch(const Positive& x, const Positive& y)
      : std::invalid_argument("fiber level mismatch: " + x.str() + " vs " +
                              y.str()) {}
};

/// ξ·1_m in X_m.
struct FiberElement {
  Positive level;
  LaurentPoly poly;

  static FiberElement unit(const Positive& m) { return {m, LaurentPoly(1)}; }
  static FiberElement monomial(const Positive& m, const Integer& k) {
    return {m, LaurentPoly::Z(k)};
  }

  friend bool operator==(const FiberElement&, const FiberElement&) = default;
};

inline void require_same_level(const Positive& x, const Positive& y) {
  if (x != y) throw LevelMismatch(x, y);
}

inline FiberElement right_act(const FiberElement& x, const LaurentPoly& f) {
  return {x.level, x.poly * inflate(x.level, f)};
}

inline FiberElement left_act(const LaurentPoly& f, const FiberElement& x) {
  return {x.level, f * x.poly};
}

inline LaurentPoly inner(const FiberElement& x, const FiberElement& y) {
  require_same_level(x.level, y.level);
  return transfer(x.level, star(x.poly) * y.poly);
}

/// (ξ1_m)(η1_r) = (ξ η(z^m)) 1_{mr}
inline FiberElement fiber_mul(const FiberElement& x, const FiberElement& y) {
  return {x.level * y.level, x.poly * inflate(x.level, y.poly)};
}

/// θ_{ξ1_m, η1_m}; the level lives on the enclosing CompactOp.
struct RankOne {
  LaurentPoly left;
  LaurentPoly right;

  friend bool operator==(const RankOne&, const RankOne&) = default;
};

/// Finite sum of rank-one operators on X_level. Not canonicalized: use
/// compact_equal to compare.
struct CompactOp {
  Positive level;
  std::vector<RankOne> terms;

  static CompactOp zero(const Positive& m) { return {m, {}}; }
  static CompactOp rank_one(const Positive& m, LaurentPoly left,
                            LaurentPoly right) {
    return {m, {RankOne{std::move(left), std::move(right)}}};
  }

  CompactOp& operator+=(const CompactOp& o) {
    require_same_level(level, o.level);
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }
  friend CompactOp operator+(CompactOp s, const CompactOp& t) { return s += t; }

  CompactOp scaled(const GaussianRational& c) const {
    CompactOp out{level, terms};
    for (auto& t : out.terms) t.left = t.left.scaled(c);
    return out;
  }
};

/// θ_{ξ,η}(ζ) = ξ E_m(η* ζ), summed over the terms.
inline FiberElement compact_apply(const CompactOp& s, const FiberElement& z) {
  require_same_level(s.level, z.level);
  LaurentPoly out;
  for (const auto& t : s.terms) {
    out += t.left * cond_exp(s.level, star(t.right) * z.poly);
  }
  return {s.level, std::move(out)};
}

/// Operator product s∘t: θ_{ξ,η} θ_{ξ',η'} = θ_{ξ E_m(η* ξ'), η'}.
inline CompactOp compact_compose(const CompactOp& s, const CompactOp& t) {
  require_same_level(s.level, t.level);
  CompactOp out = CompactOp::zero(s.level);
  for (const auto& a : s.terms) {
    for (const auto& b : t.terms) {
      LaurentPoly left = a.left * cond_exp(s.level, star(a.right) * b.left);
      if (left.is_zero()) continue;
      out.terms.push_back({std::move(left), b.right});
    }
  }
  return out;
}

/// Adjoint: θ_{ξ,η}* = θ_{η,ξ}.
inline CompactOp compact_adjoint(const CompactOp& s) {
  CompactOp out = CompactOp::zero(s.level);
  for (const auto& t : s.terms) out.terms.push_back({t.right, t.left});
  return out;
}

/// Basis exponents that decide equality of operators at a level. Compact
/// operators are right-module maps, so T(Z^{s+m} 1_m) = Z^m T(Z^s 1_m) and
/// one full period of exponents determines the operator.
inline std::vector<Integer> decision_window(const Positive& level) {
  std::vector<Integer> window;
  for (Integer s = 0; s < level.value(); ++s) window.push_back(s);
  return window;
}

inline bool compact_equal(const CompactOp& s, const CompactOp& t) {
  require_same_level(s.level, t.level);
  for (const auto& e : decision_window(s.level)) {
    const auto z = FiberElement::monomial(s.level, e);
    if (compact_apply(s, z) != compact_apply(t, z)) return false;
  }
  return true;
}

inline bool compact_is_zero(const CompactOp& s) {
  return compact_equal(s, CompactOp::zero(s.level));
}

/// i_m^{mr}: θ_{ξ1_m, η1_m} ↦ (ζ1_{mr} ↦ ξ E_m(η* ζ) 1_{mr}), written as
/// the level-mr compact Σ_{c<r} θ_{ξ Z^{mc}, η Z^{mc}}.
inline CompactOp embed(const CompactOp& s, const Positive& r) {
  CompactOp out = CompactOp::zero(s.level * r);
  for (const auto& t : s.terms) {
    for (Integer c = 0; c < r.value(); ++c) {
      const Integer shift = s.level.value() * c;
      out.terms.push_back({t.left.shifted(shift), t.right.shifted(shift)});
    }
  }
  return out;
}

/// Action of i_m^{mr}(s) on ζ1_{mr} computed directly, without expanding
/// the embedding into rank-ones.
inline FiberElement embedded_apply(const CompactOp& s, const Positive& r,
                                   const FiberElement& z) {
  require_same_level(s.level * r, z.level);
  LaurentPoly out;
  for (const auto& t : s.terms) {
    out += t.left * cond_exp(s.level, star(t.right) * z.poly);
  }
  return {z.level, std::move(out)};
}

namespace detail {

// θ_{Z^i 1_m, Z^k 1_m} and θ_{Z^l 1_n, Z^j 1_n} lifted to m∨n and
// multiplied. Returns false for the zero product (k ≢ l mod gcd).
inline bool nica_monomial(const Positive& m, const Positive& n,
                          const Integer& i, const Integer& k,
                          const Integer& l, const Integer& j, Integer& left,
                          Integer& right) {
  const Positive d = gcd(m, n);
  const Integer diff = l - k;
  if (!divides(d, diff)) return false;
  const auto bz = bezout(exact_div(m, d), exact_div(n, d));
  const Integer q = diff / d.value();
  left = i + m.value() * bz.alpha * q;
  right = j + n.value() * bz.beta * q;
  return true;
}

}  // namespace detail

/// i_m^{m∨n}(s) i_n^{m∨n}(t) in closed form, expanding both operators into
/// monomial rank-ones.
inline CompactOp nica_product(const CompactOp& s, const CompactOp& t) {
  const Positive& m = s.level;
  const Positive& n = t.level;
  CompactOp out = CompactOp::zero(lcm(m, n));
  Integer left, right;
  for (const auto& a : s.terms) {
    for (const auto& b : t.terms) {
      for (const auto& [i, ci] : a.left.coeffs()) {
        for (const auto& [k, ck] : a.right.coeffs()) {
          for (const auto& [l, cl] : b.left.coeffs()) {
            for (const auto& [j, cj] : b.right.coeffs()) {
              if (!detail::nica_monomial(m, n, i, k, l, j, left, right)) {
                continue;
              }
              const GaussianRational c = ci * ck.conj() * cl * cj.conj();
              out.terms.push_back(
                  {LaurentPoly::monomial(left, c), LaurentPoly::Z(right)});
            }
          }
        }
      }
    }
  }
  return out;
}

/// The same product computed as compact_compose of the two embeddings.
inline CompactOp nica_product_by_embedding(const CompactOp& s,
                                           const CompactOp& t) {
  const Positive join = lcm(s.level, t.level);
  return compact_compose(embed(s, exact_div(join, s.level)),
                         embed(t, exact_div(join, t.level)));
}

/// φ_m(f) = Σ_{k<m} θ_{f Z^k 1_m, Z^k 1_m}.
inline CompactOp phi_as_compact(const Positive& m, const LaurentPoly& f) {
  CompactOp out = CompactOp::zero(m);
  for (Integer k = 0; k < m.value(); ++k) {
    out.terms.push_back({f.shifted(k), LaurentPoly::Z(k)});
  }
  return out;
}

}  // namespace ntcov
