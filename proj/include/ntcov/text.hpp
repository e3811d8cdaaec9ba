#pragma once

// Text forms: Laurent polynomials (`1/2*Z^-3 + i*Z^2`), algebra expressions
// (`w(2)' u^2 w(2)`, `2*w(6)w(6)' - 1`), canonical element printing and
// the JSON form of elements.
//
// Expression grammar (the printer's output is accepted as well: `w_m` for
// `w(m)`, a postfix `*` after a factor for the adjoint, and an optional
// `*` between a leading scalar and its factors):
//
//   element := ['-'] term (('+'|'-') term)*
//   term    := scalar ['*'] factor* | factor+
//   factor  := atom ['^' int] ("'" | '*')*
//   atom    := 'u' | 'w(' nat ')' | 'w_' nat | '(' element ')'
//   scalar  := nat ['/' nat] ['i'] | 'i'

#include "ntcov/laurent.hpp"
#include "ntcov/models.hpp"
#include "ntcov/numtheory.hpp"
#include "ntcov/scalar.hpp"
#include "ntcov/word_algebra.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ntcov {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// Printing

inline std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

/// Signed text of a scalar; values with both parts nonzero are
/// parenthesized, e.g. `(1/2-3i)`.
inline std::string to_string(const GaussianRational& c) {
  auto imag = [](const Rational& im) {
    if (im == 1) return std::string("i");
    if (im == -1) return std::string("-i");
    return to_string(im) + "i";
  };
  if (c.is_real()) return to_string(c.re());
  if (c.re() == 0) return imag(c.im());
  std::string im = imag(c.im());
  if (im.front() != '-') im = "+" + im;
  return "(" + to_string(c.re()) + im + ")";
}

namespace detail {

// Joins signed term strings: "a", "-b" -> "a - b".
inline std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].front() == '-') {
      out += " - " + terms[i].substr(1);
    } else {
      out += " + " + terms[i];
    }
  }
  return out;
}

// Coefficient c in front of a nonempty factor string; `sep` goes between a
// plain scalar and the factors.
inline std::string scaled_term(const GaussianRational& c,
                               const std::string& factors,
                               const std::string& sep) {
  if (factors.empty()) return to_string(c);
  if (c == GaussianRational(1)) return factors;
  if (c == GaussianRational(-1)) return "-" + factors;
  const std::string s = to_string(c);
  if (s.front() == '(') return s + " " + factors;
  return s + sep + factors;
}

inline std::string power(const std::string& base, const Integer& k) {
  return k == 1 ? base : base + "^" + k.str();
}

}  // namespace detail

/// Terms in ascending exponent order; the zero polynomial prints as `0`.
inline std::string to_string(const LaurentPoly& f) {
  std::vector<std::string> terms;
  for (const auto& [k, c] : f.coeffs()) {
    const std::string z = k == 0 ? "" : detail::power("Z", k);
    const std::string s = to_string(c);
    if (z.empty()) {
      terms.push_back(s);
    } else if (c == GaussianRational(1)) {
      terms.push_back(z);
    } else if (c == GaussianRational(-1)) {
      terms.push_back("-" + z);
    } else {
      terms.push_back(s + "*" + z);
    }
  }
  return detail::join_terms(terms);
}

/// `u^a w_m w_n* u^{-b}` with unit factors omitted; empty for the identity.
inline std::string to_string(const Monomial& x) {
  std::vector<std::string> parts;
  if (x.a != 0) parts.push_back(detail::power("u", x.a));
  if (x.m != Positive(1)) parts.push_back("w_" + x.m.str());
  if (x.n != Positive(1)) parts.push_back("w_" + x.n.str() + "*");
  if (x.b != 0) parts.push_back(detail::power("u", -x.b));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

/// Canonical text, terms ordered by (m, n, a, b).
inline std::string to_string(const Element& x) {
  std::vector<std::string> terms;
  for (const auto& [mono, c] : x.terms()) {
    terms.push_back(detail::scaled_term(c, to_string(mono), "*"));
  }
  return detail::join_terms(terms);
}

inline std::string to_string(const QnVector& v) {
  std::vector<std::string> terms;
  for (const auto& [k, c] : v) {
    terms.push_back(detail::scaled_term(c, "e(" + k.str() + ")", "*"));
  }
  return detail::join_terms(terms);
}

inline std::string to_string(const NtVector& v) {
  std::vector<std::string> terms;
  for (const auto& [idx, c] : v) {
    terms.push_back(detail::scaled_term(
        c, "e(" + idx.j.str() + "," + idx.r.str() + ")", "*"));
  }
  return detail::join_terms(terms);
}

/// [{"a":..,"m":..,"n":..,"b":..,"coeff":[re_num,re_den,im_num,im_den]}, ...]
inline std::string to_json(const Element& x) {
  auto rat = [](const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "," +
           boost::multiprecision::denominator(r).str();
  };
  std::string out = "[";
  bool first = true;
  for (const auto& [mono, c] : x.terms()) {
    if (!first) out += ",";
    first = false;
    out += "{\"a\":" + mono.a.str() + ",\"m\":" + mono.m.str() +
           ",\"n\":" + mono.n.str() + ",\"b\":" + mono.b.str() +
           ",\"coeff\":[" + rat(c.re()) + "," + rat(c.im()) + "]}";
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Next character without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() { return peek() == '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }
  void advance() { ++pos_; }

  Integer nat() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a natural number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Integer integer() {
    const bool neg = accept('-');
    Integer v = nat();
    return neg ? Integer(-v) : v;
  }

  bool at_scalar() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i';
  }

  // nat ['/' nat] ['i'] | 'i'
  GaussianRational scalar() {
    if (accept('i')) return GaussianRational::i();
    const Integer num = nat();
    Integer den = 1;
    if (accept('/')) {
      const std::size_t at = pos();
      den = nat();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational r(num, den);
    if (accept('i')) return {0, r};
    return {r};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline LaurentPoly parse_laurent_term(Cursor& cur) {
  GaussianRational coeff = 1;
  bool have_coeff = false;
  if (cur.accept('(')) {
    // Parenthesized scalar sum such as (1/2-3i).
    GaussianRational sum;
    bool neg = cur.accept('-');
    for (;;) {
      GaussianRational s = cur.scalar();
      sum += neg ? -s : s;
      if (cur.accept('+')) {
        neg = false;
      } else if (cur.accept('-')) {
        neg = true;
      } else {
        break;
      }
    }
    cur.expect(')');
    coeff = sum;
    have_coeff = true;
  } else if (cur.at_scalar()) {
    coeff = cur.scalar();
    have_coeff = true;
  }
  if (have_coeff && !cur.accept('*')) {
    if (cur.peek() != 'Z') return LaurentPoly(coeff);
  }
  if (!cur.accept('Z')) cur.fail("expected 'Z' or a coefficient");
  Integer k = 1;
  if (cur.accept('^')) k = cur.integer();
  return LaurentPoly::monomial(k, coeff);
}

}  // namespace detail

/// Parses `c*Z^k` terms joined by '+' / '-'.
inline LaurentPoly parse_laurent(std::string_view text) {
  detail::Cursor cur(text);
  LaurentPoly out;
  bool neg = cur.accept('-');
  for (;;) {
    LaurentPoly t = detail::parse_laurent_term(cur);
    out += neg ? -t : t;
    if (cur.accept('+')) {
      neg = false;
    } else if (cur.accept('-')) {
      neg = true;
    } else {
      break;
    }
  }
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return out;
}

/// Syntax tree of an algebra expression.
struct Expr {
  enum class Kind { Scalar, U, W, Adjoint, Power, Product, Sum, Negate };

  Kind kind;
  GaussianRational scalar;
  Positive index;
  Integer exponent;
  std::vector<Expr> children;

  static Expr make_scalar(GaussianRational c) {
    return {Kind::Scalar, std::move(c), {}, {}, {}};
  }
  static Expr make_u() { return {Kind::U, {}, {}, {}, {}}; }
  static Expr make_w(Positive m) { return {Kind::W, {}, std::move(m), {}, {}}; }
  static Expr make_unary(Kind k, Expr child, Integer exponent = 0) {
    return {k, {}, {}, std::move(exponent), {std::move(child)}};
  }
  static Expr make_nary(Kind k, std::vector<Expr> children) {
    return {k, {}, {}, {}, std::move(children)};
  }
};

namespace detail {

inline Expr parse_element(Cursor& cur);

inline bool at_factor(Cursor& cur) {
  const char c = cur.peek();
  return c == 'u' || c == 'w' || c == '(';
}

inline Expr parse_atom(Cursor& cur) {
  if (cur.accept('u')) return Expr::make_u();
  if (cur.accept('w')) {
    Integer m;
    std::size_t at;
    if (cur.peek_raw() == '_') {
      cur.advance();
      at = cur.pos();
      m = cur.nat();
    } else {
      cur.expect('(');
      at = cur.pos();
      m = cur.nat();
      cur.expect(')');
    }
    if (m == 0) throw ParseError("w index must be >= 1", at);
    return Expr::make_w(Positive(m));
  }
  if (cur.accept('(')) {
    Expr inner = parse_element(cur);
    cur.expect(')');
    return inner;
  }
  cur.fail("expected 'u', 'w(n)' or '('");
}

inline Expr parse_factor(Cursor& cur) {
  Expr e = parse_atom(cur);
  if (cur.accept('^')) {
    Integer k = cur.integer();
    e = Expr::make_unary(Expr::Kind::Power, std::move(e), std::move(k));
  }
  while (cur.accept('\'') || cur.accept('*')) {
    e = Expr::make_unary(Expr::Kind::Adjoint, std::move(e));
  }
  return e;
}

inline Expr parse_term(Cursor& cur) {
  std::vector<Expr> factors;
  if (cur.at_scalar()) {
    factors.push_back(Expr::make_scalar(cur.scalar()));
    if (cur.accept('*') && !at_factor(cur)) cur.fail("expected a factor");
  } else if (!at_factor(cur)) {
    cur.fail("expected a term");
  }
  while (at_factor(cur)) factors.push_back(parse_factor(cur));
  if (factors.size() == 1) return std::move(factors.front());
  return Expr::make_nary(Expr::Kind::Product, std::move(factors));
}

inline Expr parse_element(Cursor& cur) {
  std::vector<Expr> terms;
  bool neg = cur.accept('-');
  for (;;) {
    Expr t = parse_term(cur);
    terms.push_back(neg ? Expr::make_unary(Expr::Kind::Negate, std::move(t))
                        : std::move(t));
    if (cur.accept('+')) {
      neg = false;
    } else if (cur.accept('-')) {
      neg = true;
    } else {
      break;
    }
  }
  if (terms.size() == 1) return std::move(terms.front());
  return Expr::make_nary(Expr::Kind::Sum, std::move(terms));
}

}  // namespace detail

inline Expr parse_expr(std::string_view text) {
  detail::Cursor cur(text);
  Expr e = detail::parse_element(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return e;
}

namespace detail {

// If x is exactly u^k, returns k.
inline std::optional<Integer> as_u_power(const Element& x) {
  if (x.size() != 1) return std::nullopt;
  const auto& [mono, c] = *x.terms().begin();
  if (c != GaussianRational(1) || mono.m != Positive(1) ||
      mono.n != Positive(1)) {
    return std::nullopt;
  }
  return Integer(-mono.b);
}

inline Element power(const Element& x, const Integer& k) {
  if (auto uk = as_u_power(x)) return Element(u_power(*uk * k));
  if (k < 0) {
    throw std::invalid_argument("negative power of a non-unitary element");
  }
  Element result = Element::identity();
  Element base = x;
  Integer e = k;
  while (e > 0) {
    if (e % 2 == 1) result *= base;
    e /= 2;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace detail

inline Element eval_expr(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Scalar: return Element(e.scalar);
    case K::U: return Element(u_power(1));
    case K::W: return Element(w_gen(e.index));
    case K::Adjoint: return elem_star(eval_expr(e.children.front()));
    case K::Power: return detail::power(eval_expr(e.children.front()), e.exponent);
    case K::Negate: return -eval_expr(e.children.front());
    case K::Product: {
      Element acc = Element::identity();
      for (const auto& c : e.children) {
        acc *= eval_expr(c);
        if (acc.is_zero()) break;
      }
      return acc;
    }
    case K::Sum: {
      Element acc;
      for (const auto& c : e.children) acc += eval_expr(c);
      return acc;
    }
  }
  throw std::logic_error("eval_expr: bad node");
}

inline Element parse_element(std::string_view text) {
  return eval_expr(parse_expr(text));
}

}  // namespace ntcov
