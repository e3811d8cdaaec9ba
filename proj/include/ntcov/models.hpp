#pragma once

// Exact representation oracles for the word algebra.
//
// Quotient model: on the basis {e_k : k ∈ Z}, u e_k = e_{k+1} and
// w_m e_k = e_{mk}. These operators satisfy Cuntz's relations, so every
// canonical monomial acts as a partial affine injection on Z.
//
// Fock model: on the basis {e_(j,r) : j ∈ Z, r >= 1}, u shifts j and w_m
// sends (j, r) to (mj, mr). This representation does not satisfy
// Σ_{k<m} u^k w_m w_m* u^{-k} = 1 and separates the Nica-Toeplitz algebra
// from its quotient.

#include "ntcov/numtheory.hpp"
#include "ntcov/scalar.hpp"
#include "ntcov/word_algebra.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ntcov {

/// k ↦ num·(k - offset)/modulus + shift on {k ≡ offset (mod modulus)}.
/// The representation of a partial map is unique: the domain fixes
/// (modulus, offset) and the action fixes (num, shift).
struct PartialAffineMap {
  Positive modulus;
  Integer offset;
  Positive num;
  Integer shift;

  bool in_domain(const Integer& k) const {
    return mod_floor(k, modulus) == offset;
  }

  std::optional<Integer> apply(const Integer& k) const {
    if (!in_domain(k)) return std::nullopt;
    return num.value() * ((k - offset) / modulus.value()) + shift;
  }

  Rational slope() const { return Rational(num.value(), modulus.value()); }

  /// f(k) = slope·k + intercept on the domain.
  Rational intercept() const {
    return Rational(shift) - slope() * Rational(offset);
  }

  friend bool operator==(const PartialAffineMap&,
                         const PartialAffineMap&) = default;
};

inline PartialAffineMap mono_to_qn_map(const Monomial& x) {
  auto [offset, s] = canonical_residue(x.b, x.n);
  return {x.n, std::move(offset), x.m, x.a - x.m.value() * s};
}

namespace detail {

// Modular inverse of a modulo n for coprime a, n (n >= 1).
inline Integer mod_inverse(const Integer& a, const Positive& n) {
  if (n == Positive(1)) return 0;
  return bezout(Positive(mod_floor(a, n)), n).alpha;
}

}  // namespace detail

/// f∘g (g applied first), or nullopt when the composite has empty domain.
inline std::optional<PartialAffineMap> map_compose(const PartialAffineMap& f,
                                                   const PartialAffineMap& g) {
  // Domain of g is k = g.offset + g.modulus·t with image g.num·t + g.shift;
  // f needs g.num·t ≡ f.offset - g.shift (mod f.modulus).
  const Integer rhs = f.offset - g.shift;
  const Integer h = gcd(g.num.value(), f.modulus.value());
  if (rhs % h != 0) return std::nullopt;
  const Positive step(f.modulus.value() / h);
  const Integer t0 = mod_floor(
      (rhs / h) * detail::mod_inverse(g.num.value() / h, step), step);
  const Positive modulus = g.modulus * step;
  const Integer offset = mod_floor(g.offset + g.modulus.value() * t0, modulus);
  const Integer image = *f.apply(*g.apply(offset));
  const Positive num(f.num.value() * g.num.value() / h);
  return PartialAffineMap{modulus, offset, num, image};
}

/// Basis vector e_(j, r) of the Fock model.
struct FockBasisIndex {
  Integer j;
  Positive r;

  friend bool operator==(const FockBasisIndex&, const FockBasisIndex&) = default;
  friend bool operator<(const FockBasisIndex& x, const FockBasisIndex& y) {
    if (x.r != y.r) return x.r < y.r;
    return x.j < y.j;
  }
};

/// (j, r) ↦ (first(j), r·scale_num/scale_den) on {j in dom(first), divisor | r}.
/// The scale is stored in lowest terms and scale_den divides divisor.
struct FockMap {
  PartialAffineMap first;
  Positive divisor;
  Positive scale_num;
  Positive scale_den;

  std::optional<FockBasisIndex> apply(const FockBasisIndex& v) const {
    if (!divides(divisor, v.r)) return std::nullopt;
    auto j = first.apply(v.j);
    if (!j) return std::nullopt;
    return FockBasisIndex{std::move(*j),
                          Positive(v.r.value() / scale_den.value() *
                                   scale_num.value())};
  }

  friend bool operator==(const FockMap&, const FockMap&) = default;
};

inline FockMap mono_to_nt_map(const Monomial& x) {
  const Positive g = gcd(x.m, x.n);
  return {mono_to_qn_map(x), x.n, exact_div(x.m, g), exact_div(x.n, g)};
}

inline std::optional<FockMap> nt_compose(const FockMap& f, const FockMap& g) {
  auto first = map_compose(f.first, g.first);
  if (!first) return std::nullopt;
  // r must satisfy g.divisor | r and f.divisor | r·g.scale_num/g.scale_den.
  const Integer need = f.divisor.value() * g.scale_den.value();
  const Positive extra(need / gcd(need, g.scale_num.value()));
  const Positive num = f.scale_num * g.scale_num;
  const Positive den = f.scale_den * g.scale_den;
  const Positive h = gcd(num, den);
  return FockMap{std::move(*first), lcm(g.divisor, extra), exact_div(num, h),
                 exact_div(den, h)};
}

using QnVector = std::map<Integer, GaussianRational>;
using NtVector = std::map<FockBasisIndex, GaussianRational>;

namespace detail {

template <typename Key>
void accumulate(std::map<Key, GaussianRational>& v, Key k,
                const GaussianRational& c) {
  auto [it, inserted] = v.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

}  // namespace detail

/// x e_k in the quotient model.
inline QnVector apply_basis(const Element& x, const Integer& k) {
  QnVector out;
  for (const auto& [mono, c] : x.terms()) {
    if (auto img = mono_to_qn_map(mono).apply(k)) {
      detail::accumulate(out, std::move(*img), c);
    }
  }
  return out;
}

/// x e_(j, r) in the Fock model.
inline NtVector apply_basis(const Element& x, const FockBasisIndex& v) {
  NtVector out;
  for (const auto& [mono, c] : x.terms()) {
    if (auto img = mono_to_nt_map(mono).apply(v)) {
      detail::accumulate(out, std::move(*img), c);
    }
  }
  return out;
}

namespace detail {

struct AffineKey {
  Rational slope;
  Rational intercept;

  friend bool operator<(const AffineKey& x, const AffineKey& y) {
    if (x.slope != y.slope) return x.slope < y.slope;
    return x.intercept < y.intercept;
  }
};

struct ActiveTerm {
  Positive modulus;
  Integer offset;
  GaussianRational coeff;
};

// Zero test in the quotient model over the given terms. Terms are grouped
// by their affine function (which does not depend on the residue class);
// within a class mod L two distinct affine functions agree in at most one
// point, so the operator vanishes iff every group's coefficient sum
// vanishes on every residue class.
inline bool is_zero_on_terms(
    const std::vector<std::pair<const Monomial*, const GaussianRational*>>&
        terms) {
  std::map<AffineKey, std::vector<ActiveTerm>> groups;
  for (const auto& [mono, c] : terms) {
    const auto f = mono_to_qn_map(*mono);
    groups[AffineKey{f.slope(), f.intercept()}].push_back(
        {f.modulus, f.offset, *c});
  }
  for (const auto& [key, members] : groups) {
    Positive period(1);
    for (const auto& t : members) period = lcm(period, t.modulus);
    for (Integer cls = 0; cls < period.value(); ++cls) {
      GaussianRational sum;
      for (const auto& t : members) {
        if (mod_floor(cls, t.modulus) == t.offset) sum += t.coeff;
      }
      if (!sum.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Whether x vanishes in the quotient model (equivalently, by simplicity of
/// the quotient algebra, whether x = 0 there).
inline bool is_zero_qn(const Element& x) {
  std::vector<std::pair<const Monomial*, const GaussianRational*>> terms;
  for (const auto& [mono, c] : x.terms()) terms.emplace_back(&mono, &c);
  return detail::is_zero_on_terms(terms);
}

/// Whether x vanishes in the Fock model. For each divisor r of the lcm of
/// the right-hand indices, the monomials acting on (·, r) are those with
/// n | r; the second coordinate of the image is determined by the slope.
inline bool is_zero_nt(const Element& x) {
  Positive top(1);
  for (const auto& [mono, c] : x.terms()) top = lcm(top, mono.n);
  for (const auto& r : divisors(top)) {
    std::vector<std::pair<const Monomial*, const GaussianRational*>> active;
    for (const auto& [mono, c] : x.terms()) {
      if (divides(mono.n, r)) active.emplace_back(&mono, &c);
    }
    if (!detail::is_zero_on_terms(active)) return false;
  }
  return true;
}

enum class Algebra { NicaToeplitz, Quotient };

inline bool equal(Algebra algebra, const Element& x, const Element& y) {
  const Element diff = x - y;
  return algebra == Algebra::NicaToeplitz ? is_zero_nt(diff) : is_zero_qn(diff);
}

}  // namespace ntcov
