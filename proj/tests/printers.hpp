#pragma once

// gtest value printers.

#include "ntcov/text.hpp"

#include <optional>
#include <ostream>

namespace ntcov {

inline void PrintTo(const Monomial& x, std::ostream* os) {
  *os << "(" << x.a << "," << x.m.str() << "," << x.n.str() << "," << x.b << ")";
}
inline void PrintTo(const std::optional<Monomial>& x, std::ostream* os) {
  if (!x) {
    *os << "zero";
  } else {
    PrintTo(*x, os);
  }
}
inline void PrintTo(const Element& x, std::ostream* os) { *os << to_string(x); }
inline void PrintTo(const LaurentPoly& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const GaussianRational& c, std::ostream* os) { *os << to_string(c); }
inline void PrintTo(const FiberElement& x, std::ostream* os) {
  *os << "(" << to_string(x.poly) << ")*1_" << x.level.str();
}
inline void PrintTo(const Positive& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const PartialAffineMap& f, std::ostream* os) {
  *os << "k=" << f.offset << " mod " << f.modulus.str() << " -> " << f.num.str()
      << "*(k-" << f.offset << ")/" << f.modulus.str() << "+" << f.shift;
}

}  // namespace ntcov
