#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace superds {

/// Exact rational scalar used everywhere; there is no floating point in this library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (surrounding spaces allowed). Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Floor/ceil of an exact rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Converts an integral rational that fits into a long; throws otherwise.
long to_long(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);

}  // namespace superds
