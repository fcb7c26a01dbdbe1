#pragma once

#include <gmpxx.h>

#include <string>

namespace isobgg {

using Rational = mpq_class;

// canonical a/b
inline Rational fraction(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational &q) { return q.get_str(); }

inline Rational parse_rational(const std::string &s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

} // namespace isobgg
