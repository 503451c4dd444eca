#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mcg {

/// Exact rational number (canonical: gcd 1, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or an integer; throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// n/d in canonical form; mpq_class(n, d) alone does not reduce.
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational floor(const Rational& value);
Rational ceil(const Rational& value);

}  // namespace mcg
