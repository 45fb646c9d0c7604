#pragma once

#include <gmpxx.h>

#include <string>

namespace symgb {

/// Exact rational coefficients. Values are kept canonical (reduced, positive
/// denominator) by construction; use makeRational instead of the raw
/// two-argument mpq_class constructor, which does not canonicalize.
using Rational = mpq_class;

inline Rational makeRational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool isZero(const Rational& q) { return sgn(q) == 0; }

inline std::string toString(const Rational& q) { return q.get_str(); }

}  // namespace symgb
