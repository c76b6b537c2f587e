#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace freefield {

/// Exact rational scalar used by every module.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-7/2" or "0.5"-free rational syntax; throws Error on junk.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// True when q has denominator one.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q);

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace freefield
