#pragma once

// Symbolic *-algebra on a unitary u and isometries w_m subject to
//   w_{mn} = w_m w_n,  w_m u = u^m w_m,
//   w_p* w_q = w_q w_p* (distinct primes p, q),  w_p* u^k w_p = 0 (0<k<p).
// Every product of generators is a scalar multiple of a monomial
// u^a w_m w_n* u^{-b} or zero; monomials are stored in the canonical form
// 0 <= a < m of the equivalence (a, m, n, b) ~ (a + tm, m, n, b + tn).

#include "ntcov/laurent.hpp"
#include "ntcov/numtheory.hpp"
#include "ntcov/product_system.hpp"
#include "ntcov/scalar.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace ntcov {

/// u^a w_m w_n* u^{-b}
struct Monomial {
  Integer a;
  Positive m;
  Positive n;
  Integer b;

  static Monomial identity() { return {0, Positive(1), Positive(1), 0}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Ordered by (m, n, a, b).
  friend bool operator<(const Monomial& x, const Monomial& y) {
    if (x.m != y.m) return x.m < y.m;
    if (x.n != y.n) return x.n < y.n;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

inline Monomial mono_canon(const Integer& a, const Positive& m,
                           const Positive& n, const Integer& b) {
  auto [r, t] = canonical_residue(a, m);
  return {std::move(r), m, n, b - t * n.value()};
}

inline Monomial mono_canon(const Monomial& x) {
  return mono_canon(x.a, x.m, x.n, x.b);
}

inline bool is_canonical(const Monomial& x) {
  return x.a >= 0 && x.a < x.m.value();
}

/// (u^a w_m w_n* u^{-b})* = u^b w_n w_m* u^{-a}
inline Monomial mono_star(const Monomial& x) {
  return mono_canon(x.b, x.n, x.m, x.a);
}

/// Data of the middle factor w_n* u^l w_p in a product of two monomials.
struct ProductWitnessSpace {
  bool zero = true;
  Positive n1;  // n / gcd(n, p)
  Positive p1;  // p / gcd(n, p)
  Integer l1;   // l / gcd(n, p)
};

inline ProductWitnessSpace product_witness_space(const Monomial& x,
                                                 const Monomial& y) {
  ProductWitnessSpace ws;
  const Integer l = y.a - x.b;
  const Positive g = gcd(x.n, y.m);
  if (!divides(g, l)) return ws;
  ws.zero = false;
  ws.n1 = exact_div(x.n, g);
  ws.p1 = exact_div(y.m, g);
  ws.l1 = l / g.value();
  return ws;
}

/// x·y using the witness l1 = wx·n1 - wy·p1 for the middle exponent.
/// Throws when (wx, wy) is not a valid witness; the result does not depend
/// on which valid witness is used.
inline std::optional<Monomial> mono_mul_with_witness(const Monomial& x,
                                                     const Monomial& y,
                                                     const Integer& wx,
                                                     const Integer& wy) {
  const auto ws = product_witness_space(x, y);
  if (ws.zero) return std::nullopt;
  if (wx * ws.n1.value() - wy * ws.p1.value() != ws.l1) {
    throw std::invalid_argument("mono_mul_with_witness: invalid witness");
  }
  return mono_canon(x.a + x.m.value() * wx, x.m * ws.p1, y.n * ws.n1,
                    y.b + y.n.value() * wy);
}

/// The product of two monomials, or nullopt when it vanishes.
///
/// u^a w_m w_n* u^{-b} · u^c w_p w_q* u^{-d}: the middle w_n* u^{c-b} w_p is
/// zero unless g = gcd(n, p) divides l = c - b, and otherwise equals
/// u^x w_{p/g} w_{n/g}* u^{-y} for any x, y with l/g = x n/g - y p/g.
inline std::optional<Monomial> mono_mul(const Monomial& x, const Monomial& y) {
  const auto ws = product_witness_space(x, y);
  if (ws.zero) return std::nullopt;
  const auto bz = bezout(ws.n1, ws.p1);
  const Integer wx = bz.alpha * ws.l1;
  const Integer wy = bz.beta * ws.l1;
  return mono_canon(x.a + x.m.value() * wx, x.m * ws.p1, y.n * ws.n1,
                    y.b + y.n.value() * wy);
}

/// Finite linear combination of canonical monomials.
class Element {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  Element() = default;
  Element(const Monomial& x, GaussianRational c = 1) { add_term(x, c); }
  Element(GaussianRational c) { add_term(Monomial::identity(), c); }
  template <std::integral I>
  Element(I c) : Element(GaussianRational(c)) {}

  static Element zero() { return {}; }
  static Element identity() { return Element(Monomial::identity()); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c·x; x need not be canonical.
  Element& add_term(const Monomial& x, const GaussianRational& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(mono_canon(x), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  Element& operator+=(const Element& o) {
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [x, c] : o.terms_) add_term(x, -c);
    return *this;
  }
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  Element operator-() const { return scaled(-1); }

  friend Element operator*(const Element& x, const Element& y) {
    Element out;
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        if (auto p = mono_mul(mx, my)) out.add_term(*p, cx * cy);
      }
    }
    return out;
  }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  Element scaled(const GaussianRational& s) const {
    Element out;
    if (s.is_zero()) return out;
    for (const auto& [x, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), x, c * s);
    return out;
  }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

inline Element elem_star(const Element& x) {
  Element out;
  for (const auto& [mono, c] : x.terms()) out.add_term(mono_star(mono), c.conj());
  return out;
}

/// Monomial for u^k.
inline Monomial u_power(const Integer& k) {
  return mono_canon(k, Positive(1), Positive(1), 0);
}

inline Monomial w_gen(const Positive& m) { return {0, m, Positive(1), 0}; }
inline Monomial w_star_gen(const Positive& m) {
  return {0, Positive(1), m, 0};
}

/// One of u, u*, w_m, w_m*.
struct GeneratorToken {
  enum class Kind { U, Ustar, W, Wstar };
  Kind kind;
  Positive index;

  static GeneratorToken u() { return {Kind::U, Positive(1)}; }
  static GeneratorToken u_star() { return {Kind::Ustar, Positive(1)}; }
  static GeneratorToken w(const Positive& m) { return {Kind::W, m}; }
  static GeneratorToken w_star(const Positive& m) { return {Kind::Wstar, m}; }

  Monomial monomial() const {
    switch (kind) {
      case Kind::U: return u_power(1);
      case Kind::Ustar: return u_power(-1);
      case Kind::W: return w_gen(index);
      case Kind::Wstar: return w_star_gen(index);
    }
    throw std::logic_error("GeneratorToken: bad kind");
  }

  friend bool operator==(const GeneratorToken&, const GeneratorToken&) = default;
};

/// Left fold of the token monomials; the empty word is the identity.
inline Element word_reduce(std::span<const GeneratorToken> word) {
  std::optional<Monomial> acc = Monomial::identity();
  for (const auto& tok : word) {
    acc = mono_mul(*acc, tok.monomial());
    if (!acc) return Element::zero();
  }
  return Element(*acc);
}

/// Z^k 1_m ↦ u^k w_m, extended linearly.
inline Element fiber_to_word(const FiberElement& x) {
  Element out;
  for (const auto& [k, c] : x.poly.coeffs()) {
    out.add_term(Monomial{k, x.level, Positive(1), 0}, c);
  }
  return out;
}

/// θ_{ξ,η} ↦ ψ(ξ) ψ(η)*.
inline Element compact_to_word(const CompactOp& s) {
  Element out;
  for (const auto& t : s.terms) {
    out += fiber_to_word({s.level, t.left}) *
           elem_star(fiber_to_word({s.level, t.right}));
  }
  return out;
}

}  // namespace ntcov
