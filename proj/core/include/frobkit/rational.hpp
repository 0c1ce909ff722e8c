#pragma once

#include <gmpxx.h>

#include <string>

namespace frobkit {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical "a/b" (or "a" when b = 1) rendering.
inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text);

// floor(a / b) for b > 0.
inline long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace frobkit
