#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cfl {

/// Arbitrary-precision rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace cfl
