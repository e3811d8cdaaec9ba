#include "ntcov/text.hpp"
#include "oracles.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ntcov;

namespace {

Positive P(std::int64_t v) { return Positive(v); }
Monomial M(std::int64_t a, std::int64_t m, std::int64_t n, std::int64_t b) {
  return mono_canon(a, P(m), P(n), b);
}
std::string normalize(std::string_view text) { return to_string(parse_element(text)); }

std::size_t error_position(std::string_view text) {
  try {
    parse_element(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return std::string::npos;
}

}  // namespace

TEST(Parse, TreeShapes) {
  using K = Expr::Kind;
  const Expr a = parse_expr("w(2)' u^2 w(2)");
  ASSERT_EQ(a.kind, K::Product);
  ASSERT_EQ(a.children.size(), 3u);
  EXPECT_EQ(a.children[0].kind, K::Adjoint);
  EXPECT_EQ(a.children[0].children[0].kind, K::W);
  EXPECT_EQ(a.children[0].children[0].index, P(2));
  EXPECT_EQ(a.children[1].kind, K::Power);
  EXPECT_EQ(a.children[1].exponent, 2);
  EXPECT_EQ(a.children[1].children[0].kind, K::U);

  const Expr b = parse_expr("u u'");
  ASSERT_EQ(b.kind, K::Product);
  EXPECT_EQ(b.children[0].kind, K::U);
  EXPECT_EQ(b.children[1].kind, K::Adjoint);

  const Expr c = parse_expr("2*w(6)w(6)' - 1");
  ASSERT_EQ(c.kind, K::Sum);
  ASSERT_EQ(c.children.size(), 2u);
  EXPECT_EQ(c.children[0].kind, K::Product);
  EXPECT_EQ(c.children[0].children[0].kind, K::Scalar);
  EXPECT_EQ(c.children[0].children[0].scalar, GaussianRational(2));
  EXPECT_EQ(c.children[1].kind, K::Negate);
}

TEST(Eval, Examples) {
  EXPECT_EQ(normalize("w(2)' u^2 w(2)"), "u");
  EXPECT_EQ(normalize("u u'"), "1");
  EXPECT_EQ(normalize("w(3)' u w(3)"), "0");
  EXPECT_EQ(normalize("2*w(6)w(6)' - 1"), "-1 + 2*w_6 w_6*");
  EXPECT_EQ(normalize("w(6)' u^6 w(4)"), "u w_2 w_3*");
  EXPECT_EQ(normalize("w(2) w(3)"), "w_6");
  EXPECT_EQ(normalize("u^-3"), "u^-3");
  EXPECT_EQ(normalize("(u + u')^2"), "u^2 + 2 + u^-2");
  EXPECT_EQ(normalize("1/2 i w(2)'"), "1/2i*w_2*");
  EXPECT_EQ(normalize("(1/2 - 3i) u"), "(1/2-3i) u");
  EXPECT_EQ(normalize("-u + u"), "0");
  EXPECT_EQ(normalize("(w(2) u)'"), "w_2* u^-2");
}

TEST(Eval, NegativePowerOfNonUnitaryThrows) {
  EXPECT_THROW(parse_element("w(2)^-1"), std::invalid_argument);
  EXPECT_EQ(parse_element("(u^2)^-2"), Element(u_power(-4)));
  EXPECT_EQ(parse_element("w(2)^3"), Element(w_gen(P(8))));
  EXPECT_EQ(parse_element("w(5)^0"), Element::identity());
}

TEST(Print, MonomialsAndScalars) {
  EXPECT_EQ(to_string(Monomial::identity()), "");
  EXPECT_EQ(to_string(M(1, 2, 3, 0)), "u w_2 w_3*");
  EXPECT_EQ(to_string(M(0, 1, 1, 1)), "u^-1");
  EXPECT_EQ(to_string(M(4, 6, 6, 3)), "u^4 w_6 w_6* u^-3");
  EXPECT_EQ(to_string(GaussianRational(Rational(-3, 4))), "-3/4");
  EXPECT_EQ(to_string(GaussianRational::i()), "i");
  EXPECT_EQ(to_string(GaussianRational(0, -2)), "-2i");
  EXPECT_EQ(to_string(GaussianRational(1, 1)), "(1+i)");
  EXPECT_EQ(to_string(Element()), "0");
}

TEST(Print, AcceptedAlternativeSpellings) {
  EXPECT_EQ(parse_element("w_2 w_2*"), parse_element("w(2) w(2)'"));
  EXPECT_EQ(parse_element("3 w(2)"), parse_element("3*w(2)"));
  EXPECT_EQ(parse_element("i"), Element(GaussianRational::i()));
  EXPECT_EQ(parse_element("u''"), parse_element("u"));
}

TEST(RoundTrip, RandomElements) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 500; ++trial) {
    const Element x = oracle::random_element(rng, 6, 12, 40);
    const std::string text = to_string(x);
    ASSERT_EQ(parse_element(text), x) << text;
    ASSERT_EQ(to_string(parse_element(text)), text);
  }
}

TEST(Json, FormAndDeterminism) {
  EXPECT_EQ(to_json(parse_element("w(2)")),
            R"([{"a":0,"m":2,"n":1,"b":0,"coeff":[1,1,0,1]}])");
  EXPECT_EQ(to_json(Element()), "[]");
  EXPECT_EQ(to_json(parse_element("-1/2 + 3i u w(3)'")),
            R"([{"a":0,"m":1,"n":1,"b":0,"coeff":[-1,2,0,1]},)"
            R"({"a":0,"m":1,"n":3,"b":-3,"coeff":[0,1,3,1]}])");
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 100; ++trial) {
    const Element x = oracle::random_element(rng, 6, 12, 40);
    ASSERT_EQ(to_json(x), to_json(parse_element(to_string(x))));
  }
}

TEST(ParseErrors, ReportPositions) {
  EXPECT_EQ(error_position("w(0)"), 2u);
  EXPECT_EQ(error_position("w_0"), 2u);
  EXPECT_EQ(error_position("u +"), 3u);
  EXPECT_EQ(error_position("w(2"), 3u);
  EXPECT_EQ(error_position("u ^"), 3u);
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("u v"), 2u);
  EXPECT_EQ(error_position("3/0 u"), 2u);
  EXPECT_EQ(error_position("(u"), 2u);
}

TEST(Laurent, ParseAndPrint) {
  const GaussianRational half(Rational(1, 2));
  const LaurentPoly f = parse_laurent("1/2*Z^-3 + i*Z^2");
  EXPECT_EQ(f, LaurentPoly::monomial(-3, half) +
                   LaurentPoly::monomial(2, GaussianRational::i()));
  EXPECT_EQ(to_string(f), "1/2*Z^-3 + i*Z^2");
  EXPECT_EQ(parse_laurent("Z^2 + Z^3"), LaurentPoly::Z(2) + LaurentPoly::Z(3));
  EXPECT_EQ(parse_laurent("-Z - 1"), -(LaurentPoly::Z(1) + LaurentPoly(1)));
  EXPECT_EQ(parse_laurent("3"), LaurentPoly(3));
  EXPECT_EQ(parse_laurent("2 Z^4"), LaurentPoly::monomial(4, 2));
  EXPECT_EQ(to_string(LaurentPoly()), "0");
  EXPECT_THROW(parse_laurent("Z^"), ParseError);
  EXPECT_THROW(parse_laurent("Y"), ParseError);

  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_poly(rng, 6, 20);
    ASSERT_EQ(parse_laurent(to_string(g)), g) << to_string(g);
  }
}
