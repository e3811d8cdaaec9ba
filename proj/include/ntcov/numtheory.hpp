#pragma once

// Divisibility arithmetic on the multiplicative semigroup of positive
// integers: gcd / lcm (the lattice join), canonical Bezout pairs, residues
// and prime factorization. All integers are arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ntcov {

using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// An element of the multiplicative semigroup of positive integers.
class Positive {
 public:
  Positive() : value_(1) {}

  explicit Positive(Integer v) : value_(std::move(v)) {
    if (value_ < 1) {
      throw std::domain_error("Positive: value must be >= 1, got " +
                              value_.str());
    }
  }

  template <std::integral I>
  explicit Positive(I v) : Positive(Integer(v)) {}

  const Integer& value() const noexcept { return value_; }

  friend Positive operator*(const Positive& x, const Positive& y) {
    return Positive(x.value_ * y.value_);
  }

  friend bool operator==(const Positive&, const Positive&) = default;
  friend std::strong_ordering operator<=>(const Positive& x,
                                          const Positive& y) {
    if (x.value_ < y.value_) return std::strong_ordering::less;
    if (y.value_ < x.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return value_.str(); }

 private:
  Integer value_;
};

/// Floor division; `den` must be nonzero.
inline Integer floor_div(const Integer& num, const Integer& den) {
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

/// Representative of `a` modulo `m` in [0, m).
inline Integer mod_floor(const Integer& a, const Positive& m) {
  Integer r = a % m.value();
  if (r < 0) r += m.value();
  return r;
}

inline bool divides(const Positive& d, const Integer& x) {
  return x % d.value() == 0;
}

inline bool divides(const Positive& d, const Positive& x) {
  return divides(d, x.value());
}

inline Integer gcd(const Integer& x, const Integer& y) {
  return boost::multiprecision::gcd(x, y);
}

inline Positive gcd(const Positive& x, const Positive& y) {
  return Positive(boost::multiprecision::gcd(x.value(), y.value()));
}

/// The lattice join m ∨ n.
inline Positive lcm(const Positive& x, const Positive& y) {
  return Positive(x.value() / gcd(x.value(), y.value()) * y.value());
}

/// Exact quotient x / d; throws when d does not divide x.
inline Positive exact_div(const Positive& x, const Positive& d) {
  if (!divides(d, x)) {
    throw std::domain_error("exact_div: " + d.str() + " does not divide " +
                            x.str());
  }
  return Positive(x.value() / d.value());
}

struct GcdLcm {
  Positive gcd;
  Positive join;
};

inline GcdLcm gcd_lcm(const Positive& m, const Positive& n) {
  return {gcd(m, n), lcm(m, n)};
}

/// alpha * m' - beta * n' = 1 for coprime m', n'.
struct BezoutPair {
  Integer alpha;
  Integer beta;

  friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

/// The canonical Bezout pair: 0 <= alpha < n' when n' > 1, and
/// (1, m' - 1) when n' = 1.
inline BezoutPair bezout(const Positive& mp, const Positive& np) {
  if (gcd(mp, np) != Positive(1)) {
    throw std::domain_error("bezout: " + mp.str() + " and " + np.str() +
                            " are not coprime");
  }
  if (np == Positive(1)) return {Integer(1), mp.value() - 1};

  // Extended Euclid for the inverse of m' modulo n'.
  Integer r0 = np.value(), r1 = mp.value() % np.value();
  Integer s0 = 0, s1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    Integer s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Integer alpha = mod_floor(s0, np);
  Integer beta = (alpha * mp.value() - 1) / np.value();
  return {std::move(alpha), std::move(beta)};
}

/// Prime factors of m with multiplicity, ascending. Trial division.
inline std::vector<Positive> factorize(const Positive& m) {
  std::vector<Positive> primes;
  Integer rest = m.value();
  for (Integer p = 2; p * p <= rest; ++p) {
    while (rest % p == 0) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  if (rest > 1) primes.emplace_back(rest);
  return primes;
}

inline bool is_prime(const Positive& m) {
  auto f = factorize(m);
  return f.size() == 1;
}

/// All positive divisors of m, ascending.
inline std::vector<Positive> divisors(const Positive& m) {
  std::vector<Integer> divs{1};
  auto primes = factorize(m);
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t base = divs.size();
    Integer power = 1;
    for (std::size_t e = i; e < j; ++e) {
      power *= primes[i].value();
      for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * power);
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  std::vector<Positive> out;
  out.reserve(divs.size());
  for (auto& d : divs) out.emplace_back(std::move(d));
  return out;
}

struct Residue {
  Integer r;
  Integer t;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// a = r + t*m with 0 <= r < m.
inline Residue canonical_residue(const Integer& a, const Positive& m) {
  Integer r = mod_floor(a, m);
  Integer t = (a - r) / m.value();
  return {std::move(r), std::move(t)};
}

}  // namespace ntcov
