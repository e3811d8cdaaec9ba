#pragma once

// The circle algebra C(T) modelled by Laurent polynomials in the unitary
// generator Z, with the endomorphisms f ↦ f(z^m), their transfer
// operators and the associated conditional expectations.

#include "ntcov/numtheory.hpp"
#include "ntcov/scalar.hpp"

#include <map>
#include <optional>
#include <utility>

namespace ntcov {

/// Finite Fourier series Σ c_k Z^k with exact coefficients.
class LaurentPoly {
 public:
  using Coeffs = std::map<Integer, GaussianRational>;

  LaurentPoly() = default;
  LaurentPoly(GaussianRational c) { add_term(0, std::move(c)); }
  template <std::integral I>
  LaurentPoly(I c) : LaurentPoly(GaussianRational(c)) {}

  /// c * Z^k
  static LaurentPoly monomial(const Integer& k, GaussianRational c = 1) {
    LaurentPoly p;
    p.add_term(k, std::move(c));
    return p;
  }
  static LaurentPoly Z(const Integer& k = 1) { return monomial(k); }

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  GaussianRational coeff(const Integer& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? GaussianRational() : it->second;
  }

  /// Largest |k| with a nonzero coefficient; nullopt for the zero polynomial.
  std::optional<Integer> max_abs_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    Integer lo = boost::multiprecision::abs(coeffs_.begin()->first);
    Integer hi = boost::multiprecision::abs(coeffs_.rbegin()->first);
    return lo < hi ? hi : lo;
  }

  LaurentPoly& add_term(const Integer& k, const GaussianRational& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) {
    return f += g;
  }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) {
    return f -= g;
  }
  LaurentPoly operator-() const { return scaled(-1); }

  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly out;
    for (const auto& [k, c] : f.coeffs_) {
      for (const auto& [l, d] : g.coeffs_) out.add_term(k + l, c * d);
    }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const GaussianRational& s) const {
    LaurentPoly out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), k, c * s);
    return out;
  }

  /// Multiplication by Z^k.
  LaurentPoly shifted(const Integer& k) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), e + k, c);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Coeffs coeffs_;
};

/// Involution: c Z^k ↦ conj(c) Z^{-k}.
inline LaurentPoly star(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [k, c] : f.coeffs()) out.add_term(-k, c.conj());
  return out;
}

/// f ↦ f(z^m).
inline LaurentPoly inflate(const Positive& m, const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [k, c] : f.coeffs()) out.add_term(k * m.value(), c);
  return out;
}

/// Transfer operator L_m(f)(z) = (1/m) Σ_{w^m = z} f(w): keeps the modes
/// divisible by m and divides their exponent by m.
inline LaurentPoly transfer(const Positive& m, const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [k, c] : f.coeffs()) {
    if (divides(m, k)) out.add_term(k / m.value(), c);
  }
  return out;
}

/// Conditional expectation onto the range of inflate(m, ·): keeps exactly
/// the modes divisible by m.
inline LaurentPoly cond_exp(const Positive& m, const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [k, c] : f.coeffs()) {
    if (divides(m, k)) out.add_term(k, c);
  }
  return out;
}

}  // namespace ntcov
