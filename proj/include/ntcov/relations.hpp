#pragma once

// Scheduled relation checks over ranges of parameters:
//   toeplitz      defining relations of the Nica-Toeplitz algebra and their
//                 consequences (shift rules, simplification of w_m* u^l w_n,
//                 products of range projections)
//   nica          Nica covariance of the fiber-to-word bridge
//   cuntz         Cuntz's relations, decided in the quotient model
//   laca-raeburn  relations of the Toeplitz algebra of N ⋊ N^x under
//                 s ↦ u, v_p ↦ w_p
// The toeplitz, nica and laca-raeburn suites compare canonical elements.

#include "ntcov/models.hpp"
#include "ntcov/numtheory.hpp"
#include "ntcov/product_system.hpp"
#include "ntcov/word_algebra.hpp"

#include <cstdint>
#include <deque>
#include <iterator>
#include <numeric>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ntcov {

enum class Suite { Toeplitz, Nica, Cuntz, LacaRaeburn };

inline std::optional<Suite> suite_from_name(std::string_view name) {
  if (name == "toeplitz") return Suite::Toeplitz;
  if (name == "nica") return Suite::Nica;
  if (name == "cuntz") return Suite::Cuntz;
  if (name == "laca-raeburn" || name == "laca_raeburn") return Suite::LacaRaeburn;
  return std::nullopt;
}

struct SuiteOptions {
  /// Largest level / index m, n and largest prime used.
  std::int64_t bound = 12;
  std::uint64_t seed = 1;
  /// Exponents range over [-exponent_bound, exponent_bound].
  std::int64_t exponent_bound = 200;
  /// Random exponents drawn per parameter tuple, on top of fixed edge values.
  std::size_t samples = 4;
};

/// Outcome of one relation family: counts plus the failing instances.
struct FamilyReport {
  std::string name;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  std::size_t total() const { return passed + failures.size(); }
  bool ok() const { return failures.empty(); }
};

struct SuiteReport {
  Suite suite;
  std::vector<FamilyReport> families;

  bool all_passed() const {
    for (const auto& f : families) {
      if (!f.ok()) return false;
    }
    return true;
  }
  std::size_t instances() const {
    std::size_t n = 0;
    for (const auto& f : families) n += f.total();
    return n;
  }
};

namespace detail {

class SuiteRunner {
 public:
  SuiteRunner(Suite suite, const SuiteOptions& opts)
      : opts_(opts), rng_(opts.seed), suite_(suite) {}

  // References stay valid: families_ is a deque.
  FamilyReport& family(std::string name) {
    families_.push_back({std::move(name), 0, {}});
    return families_.back();
  }

  static void record(FamilyReport& f, bool ok, const std::function<std::string()>& label) {
    if (ok) {
      ++f.passed;
    } else {
      f.failures.push_back(label());
    }
  }

  std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) const {
    std::vector<std::int64_t> v;
    for (auto i = lo; i <= hi; ++i) v.push_back(i);
    return v;
  }

  std::vector<std::int64_t> primes() const {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p <= opts_.bound; ++p) {
      if (is_prime(Positive(p))) ps.push_back(p);
    }
    return ps;
  }

  /// Edge exponents plus seeded random draws.
  std::vector<std::int64_t> exponents() {
    const auto L = opts_.exponent_bound;
    std::vector<std::int64_t> v{-L, -1, 0, 1, L};
    std::uniform_int_distribution<std::int64_t> dist(-L, L);
    for (std::size_t i = 0; i < opts_.samples; ++i) v.push_back(dist(rng_));
    return v;
  }

  SuiteReport take() {
    return {suite_, {std::make_move_iterator(families_.begin()),
                     std::make_move_iterator(families_.end())}};
  }
  const SuiteOptions& opts() const { return opts_; }

 private:
  SuiteOptions opts_;
  std::mt19937_64 rng_;
  Suite suite_;
  std::deque<FamilyReport> families_;
};

inline Element U(const Integer& k) { return Element(u_power(k)); }
inline Element W(std::int64_t m) { return Element(w_gen(Positive(m))); }
inline Element Ws(std::int64_t m) { return Element(w_star_gen(Positive(m))); }

inline Element reduce(std::initializer_list<GeneratorToken> word) {
  const std::vector<GeneratorToken> w(word);
  return word_reduce(w);
}

inline GeneratorToken tu() { return GeneratorToken::u(); }
inline GeneratorToken tus() { return GeneratorToken::u_star(); }
inline GeneratorToken tw(std::int64_t m) { return GeneratorToken::w(Positive(m)); }
inline GeneratorToken tws(std::int64_t m) {
  return GeneratorToken::w_star(Positive(m));
}

inline std::string str(std::int64_t v) { return std::to_string(v); }

inline void toeplitz_suite(SuiteRunner& run) {
  const auto B = run.opts().bound;
  const auto ms = run.range(1, B);
  const auto ps = run.primes();
  const Element one = Element::identity();

  auto& unitary = run.family("u u* = u* u = 1");
  SuiteRunner::record(unitary, reduce({tu(), tus()}) == one, [] { return "u u*"; });
  SuiteRunner::record(unitary, reduce({tus(), tu()}) == one, [] { return "u* u"; });

  auto& iso = run.family("w_m* w_m = 1");
  for (auto m : ms) {
    SuiteRunner::record(iso, reduce({tws(m), tw(m)}) == one,
                        [m] { return "m=" + str(m); });
  }

  auto& b0 = run.family("w_mn = w_m w_n");
  for (auto m : ms) {
    for (auto n : ms) {
      SuiteRunner::record(b0, reduce({tw(m), tw(n)}) == W(m * n),
                          [m, n] { return "m=" + str(m) + " n=" + str(n); });
    }
  }

  auto& b1 = run.family("w_m u = u^m w_m");
  for (auto m : ms) {
    SuiteRunner::record(b1, reduce({tw(m), tu()}) == U(m) * W(m),
                        [m] { return "m=" + str(m); });
  }

  auto& b2 = run.family("w_p* w_q = w_q w_p* (p != q prime)");
  for (auto p : ps) {
    for (auto q : ps) {
      if (p == q) continue;
      SuiteRunner::record(b2, reduce({tws(p), tw(q)}) == reduce({tw(q), tws(p)}),
                          [p, q] { return "p=" + str(p) + " q=" + str(q); });
    }
  }

  auto& b3 = run.family("w_p* u^k w_p = 0 (0 < k < p)");
  for (auto p : ps) {
    for (std::int64_t k = 1; k < p; ++k) {
      SuiteRunner::record(b3, (Ws(p) * U(k) * W(p)).is_zero(),
                          [p, k] { return "p=" + str(p) + " k=" + str(k); });
    }
  }

  auto& s1 = run.family("w_m u* = u*^m w_m");
  for (auto m : ms) {
    SuiteRunner::record(s1, reduce({tw(m), tus()}) == U(-m) * W(m),
                        [m] { return "m=" + str(m); });
  }

  const auto L = run.opts().exponent_bound;
  auto& s2 = run.family("u^l w_m* = w_m* u^(lm)");
  for (auto m : ms) {
    for (auto l = -L; l <= L; ++l) {
      SuiteRunner::record(s2, U(l) * Ws(m) == Ws(m) * U(Integer(l) * m),
                          [m, l] { return "m=" + str(m) + " l=" + str(l); });
    }
  }

  auto& s3 = run.family("w_m w_n* = w_n* w_m (gcd(m,n) = 1)");
  for (auto m : ms) {
    for (auto n : ms) {
      if (std::gcd(m, n) != 1) continue;
      SuiteRunner::record(s3, W(m) * Ws(n) == Ws(n) * W(m),
                          [m, n] { return "m=" + str(m) + " n=" + str(n); });
    }
  }

  auto& simp = run.family("w_m* u^l w_n = w_(m/d)* u^(l/d) w_(n/d) or 0");
  for (auto m : ms) {
    for (auto n : ms) {
      const auto d = std::gcd(m, n);
      for (auto l : run.exponents()) {
        const Element lhs = Ws(m) * U(l) * W(n);
        const Element rhs =
            l % d != 0 ? Element::zero() : Ws(m / d) * U(l / d) * W(n / d);
        SuiteRunner::record(simp, lhs == rhs, [m, n, l] {
          return "m=" + str(m) + " n=" + str(n) + " l=" + str(l);
        });
      }
    }
  }

  auto& more = run.family("w_m w_m* u^(l-k) w_n w_n* = range projection of w_(m v n)");
  for (auto m : ms) {
    for (auto n : ms) {
      const auto d = std::gcd(m, n);
      const auto join = m / d * n;
      const auto bz = bezout(Positive(m / d), Positive(n / d));
      const auto ks = run.exponents();
      const auto ls = run.exponents();
      for (std::size_t idx = 0; idx < ks.size(); ++idx) {
        const auto k = ks[idx];
        const auto l = ls[(idx * 7 + 3) % ls.size()];
        const Element lhs = W(m) * Ws(m) * U(-k) * U(l) * W(n) * Ws(n);
        Element rhs;
        if ((l - k) % d == 0) {
          const Integer q = (l - k) / d;
          rhs = U(Integer(m) * bz.alpha * q) * W(join) * Ws(join) *
                U(-Integer(n) * bz.beta * q);
        }
        SuiteRunner::record(more, lhs == rhs, [m, n, k, l] {
          return "m=" + str(m) + " n=" + str(n) + " k=" + str(k) +
                 " l=" + str(l);
        });
      }
    }
  }
}

inline void nica_suite(SuiteRunner& run) {
  const auto B = run.opts().bound;
  const auto ms = run.range(1, B);

  auto& proj = run.family("θ_{1_p,1_p} · θ_{1_q,1_q} lifts to θ_{1_pq,1_pq}");
  for (auto p : run.primes()) {
    for (auto q : run.primes()) {
      if (p == q) continue;
      const auto s = CompactOp::rank_one(Positive(p), 1, 1);
      const auto t = CompactOp::rank_one(Positive(q), 1, 1);
      const auto expect = CompactOp::rank_one(Positive(p * q), 1, 1);
      SuiteRunner::record(proj, compact_equal(nica_product(s, t), expect),
                          [p, q] { return "p=" + str(p) + " q=" + str(q); });
    }
  }

  auto& cov = run.family("ψ(S) ψ(T) = ψ(i(S) i(T))");
  auto& route = run.family("closed-form Nica product = product of embeddings");
  for (auto m : ms) {
    for (auto n : ms) {
      const auto es = run.exponents();
      for (std::size_t idx = 0; idx < es.size(); ++idx) {
        const Integer i = es[idx];
        const Integer k = es[(idx + 1) % es.size()];
        const Integer l = es[(idx + 2) % es.size()];
        const Integer j = es[(idx + 3) % es.size()];
        const auto s = CompactOp::rank_one(Positive(m), LaurentPoly::Z(i),
                                           LaurentPoly::Z(k));
        const auto t = CompactOp::rank_one(Positive(n), LaurentPoly::Z(l),
                                           LaurentPoly::Z(j));
        const auto prod = nica_product(s, t);
        auto label = [&] {
          return "m=" + str(m) + " n=" + str(n) + " i=" + i.str() +
                 " k=" + k.str() + " l=" + l.str() + " j=" + j.str();
        };
        SuiteRunner::record(
            cov, compact_to_word(prod) == compact_to_word(s) * compact_to_word(t),
            label);

        const Positive join = prod.level;
        const Positive rs = exact_div(join, s.level);
        const Positive rt = exact_div(join, t.level);
        bool same = true;
        for (const auto& e : decision_window(join)) {
          const auto z = FiberElement::monomial(join, e);
          if (compact_apply(prod, z) !=
              embedded_apply(s, rs, embedded_apply(t, rt, z))) {
            same = false;
            break;
          }
        }
        SuiteRunner::record(route, same, label);
      }
    }
  }
}

inline Element cuntz_sum(std::int64_t m) {
  Element sum;
  for (std::int64_t k = 0; k < m; ++k) sum += U(k) * W(m) * Ws(m) * U(-k);
  return sum;
}

inline void cuntz_suite(SuiteRunner& run) {
  const auto B = run.opts().bound;
  const auto ms = run.range(1, B);
  const Element one = Element::identity();
  const auto qn = Algebra::Quotient;

  auto& q1 = run.family("s_m s_n = s_mn");
  for (auto m : ms) {
    for (auto n : ms) {
      SuiteRunner::record(q1, equal(qn, W(m) * W(n), W(m * n)),
                          [m, n] { return "m=" + str(m) + " n=" + str(n); });
    }
  }

  auto& q2 = run.family("s_m u = u^m s_m");
  for (auto m : ms) {
    SuiteRunner::record(q2, equal(qn, W(m) * U(1), U(m) * W(m)),
                        [m] { return "m=" + str(m); });
  }

  auto& q3 = run.family("Σ_{k<m} u^k s_m s_m* u^-k = 1");
  auto& proper = run.family("Σ_{k<m} u^k w_m w_m* u^-k != 1 in the Nica-Toeplitz algebra (m > 1)");
  for (auto m : ms) {
    const Element sum = cuntz_sum(m);
    SuiteRunner::record(q3, equal(qn, sum, one), [m] { return "m=" + str(m); });
    if (m > 1) {
      SuiteRunner::record(proper, !equal(Algebra::NicaToeplitz, sum, one),
                          [m] { return "m=" + str(m); });
    }
  }
}

inline void laca_raeburn_suite(SuiteRunner& run) {
  const auto ps = run.primes();
  const Element one = Element::identity();

  auto& iso = run.family("s* s = 1, v_p* v_p = 1");
  SuiteRunner::record(iso, reduce({tus(), tu()}) == one, [] { return "s"; });
  for (auto p : ps) {
    SuiteRunner::record(iso, reduce({tws(p), tw(p)}) == one,
                        [p] { return "p=" + str(p); });
  }

  auto& lr1 = run.family("LR1 v_p s = s^p v_p");
  for (auto p : ps) {
    SuiteRunner::record(lr1, reduce({tw(p), tu()}) == U(p) * W(p),
                        [p] { return "p=" + str(p); });
  }

  auto& lr2 = run.family("LR2 v_p v_q = v_q v_p");
  auto& lr3 = run.family("LR3 v_p* v_q = v_q v_p* (p != q)");
  for (auto p : ps) {
    for (auto q : ps) {
      auto label = [p, q] { return "p=" + str(p) + " q=" + str(q); };
      SuiteRunner::record(lr2, reduce({tw(p), tw(q)}) == reduce({tw(q), tw(p)}), label);
      if (p != q) {
        SuiteRunner::record(lr3, reduce({tws(p), tw(q)}) == reduce({tw(q), tws(p)}),
                            label);
      }
    }
  }

  auto& lr4 = run.family("LR4 s* v_p = s^(p-1) v_p s*");
  for (auto p : ps) {
    SuiteRunner::record(lr4, reduce({tus(), tw(p)}) == U(p - 1) * W(p) * U(-1),
                        [p] { return "p=" + str(p); });
  }

  auto& lr5 = run.family("LR5 v_p* s^k v_p = 0 (1 <= k < p)");
  for (auto p : ps) {
    for (std::int64_t k = 1; k < p; ++k) {
      SuiteRunner::record(lr5, (Ws(p) * U(k) * W(p)).is_zero(),
                          [p, k] { return "p=" + str(p) + " k=" + str(k); });
    }
  }

  auto& rem = run.family("w_p = u^p w_p u*");
  for (auto p : ps) {
    SuiteRunner::record(rem, W(p) == U(p) * W(p) * U(-1),
                        [p] { return "p=" + str(p); });
  }

  const auto L = run.opts().exponent_bound;
  auto& pow = run.family("v_p s^l = s^(pl) v_p");
  for (auto p : ps) {
    for (auto l = -L; l <= L; ++l) {
      SuiteRunner::record(pow, W(p) * U(l) == U(Integer(p) * l) * W(p),
                          [p, l] { return "p=" + str(p) + " l=" + str(l); });
    }
  }
}

}  // namespace detail

inline SuiteReport relation_suite(Suite suite, const SuiteOptions& opts = {}) {
  if (opts.bound < 1) throw std::invalid_argument("relation_suite: bound must be >= 1");
  detail::SuiteRunner run(suite, opts);
  switch (suite) {
    case Suite::Toeplitz: detail::toeplitz_suite(run); break;
    case Suite::Nica: detail::nica_suite(run); break;
    case Suite::Cuntz: detail::cuntz_suite(run); break;
    case Suite::LacaRaeburn: detail::laca_raeburn_suite(run); break;
  }
  return run.take();
}

}  // namespace ntcov
