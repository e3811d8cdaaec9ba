#include "ntcov/numtheory.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ntcov;

namespace {

Positive P(std::int64_t v) { return Positive(v); }

}  // namespace

TEST(Positive, RejectsNonPositive) {
  EXPECT_THROW(Positive(0), std::domain_error);
  EXPECT_THROW(Positive(-3), std::domain_error);
  EXPECT_EQ(Positive().value(), 1);
}

TEST(GcdLcm, Examples) {
  auto r = gcd_lcm(P(4), P(6));
  EXPECT_EQ(r.gcd, P(2));
  EXPECT_EQ(r.join, P(12));

  r = gcd_lcm(P(1), P(9));
  EXPECT_EQ(r.gcd, P(1));
  EXPECT_EQ(r.join, P(9));

  r = gcd_lcm(P(6), P(6));
  EXPECT_EQ(r.gcd, P(6));
  EXPECT_EQ(r.join, P(6));
}

TEST(GcdLcm, Properties) {
  for (std::int64_t m = 1; m <= 40; ++m) {
    for (std::int64_t n = 1; n <= 40; ++n) {
      auto [d, join] = gcd_lcm(P(m), P(n));
      ASSERT_TRUE(divides(d, P(m)));
      ASSERT_TRUE(divides(d, P(n)));
      ASSERT_EQ(join.value() * d.value(), Integer(m * n));
      ASSERT_EQ(gcd(exact_div(P(m), d), exact_div(P(n), d)), P(1));
    }
  }
}

TEST(Bezout, Examples) {
  EXPECT_EQ(bezout(P(3), P(2)), (BezoutPair{1, 1}));
  EXPECT_EQ(bezout(P(2), P(5)), (BezoutPair{3, 1}));
  EXPECT_EQ(bezout(P(1), P(1)), (BezoutPair{1, 0}));
  EXPECT_EQ(bezout(P(7), P(1)), (BezoutPair{1, 6}));
}

TEST(Bezout, RejectsNonCoprime) {
  EXPECT_THROW(bezout(P(4), P(6)), std::domain_error);
}

TEST(Bezout, CanonicalAndDeterministic) {
  for (std::int64_t m = 1; m <= 60; ++m) {
    for (std::int64_t n = 1; n <= 60; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const auto bz = bezout(P(m), P(n));
      ASSERT_EQ(bz.alpha * m - bz.beta * n, 1) << m << " " << n;
      if (n > 1) {
        ASSERT_GE(bz.alpha, 0);
        ASSERT_LT(bz.alpha, n);
      } else {
        ASSERT_EQ(bz, (BezoutPair{1, m - 1}));
      }
      ASSERT_EQ(bz, bezout(P(m), P(n)));
    }
  }
}

TEST(Bezout, LargeArguments) {
  const Positive m(Integer("123456789012345678901234567891"));
  const Positive n(Integer("987654321098765432109876543211"));
  ASSERT_EQ(gcd(m, n), P(1));
  const auto bz = bezout(m, n);
  EXPECT_EQ(bz.alpha * m.value() - bz.beta * n.value(), 1);
  EXPECT_LT(bz.alpha, n.value());
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(P(12)), (std::vector<Positive>{P(2), P(2), P(3)}));
  EXPECT_TRUE(factorize(P(1)).empty());
  EXPECT_EQ(factorize(P(7)), (std::vector<Positive>{P(7)}));
}

TEST(Factorize, ProductRecoversInput) {
  for (std::int64_t m = 1; m <= 2000; ++m) {
    Integer prod = 1;
    for (const auto& p : factorize(P(m))) {
      ASSERT_TRUE(is_prime(p));
      prod *= p.value();
    }
    ASSERT_EQ(prod, m);
  }
}

TEST(Divisors, MatchesTrialDivision) {
  for (std::int64_t m = 1; m <= 500; ++m) {
    std::vector<Positive> expect;
    for (std::int64_t d = 1; d <= m; ++d) {
      if (m % d == 0) expect.push_back(P(d));
    }
    ASSERT_EQ(divisors(P(m)), expect) << m;
  }
}

TEST(CanonicalResidue, Examples) {
  EXPECT_EQ(canonical_residue(7, P(3)), (Residue{1, 2}));
  EXPECT_EQ(canonical_residue(-1, P(2)), (Residue{1, -1}));
  EXPECT_EQ(canonical_residue(0, P(1)), (Residue{0, 0}));
}

TEST(CanonicalResidue, Property) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> a_dist(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> m_dist(1, 97);
  for (int i = 0; i < 2000; ++i) {
    const Integer a = a_dist(rng);
    const Positive m = P(m_dist(rng));
    const auto [r, t] = canonical_residue(a, m);
    ASSERT_GE(r, 0);
    ASSERT_LT(r, m.value());
    ASSERT_EQ(r + t * m.value(), a);
  }
}

TEST(FloorDiv, NegativeOperands) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-8, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
}
