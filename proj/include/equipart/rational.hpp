#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace equipart {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "p" or a finite decimal literal such as "-0.25" into a
/// canonical rational. Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers carry an explicit "/1".
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

BigInt floor(const Rational& q);

/// Simplest rational (smallest denominator, then smallest |numerator|) in
/// the closed interval [lo, hi]. Requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

BigInt binomial(unsigned long n, unsigned long m);

}  // namespace equipart
