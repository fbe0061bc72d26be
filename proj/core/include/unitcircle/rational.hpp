#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace unitcircle {

using Rational = mpq_class;
using Integer = mpz_class;

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
/// num/den in lowest terms. Throws DivisionByZero when den == 0.
Rational ratio(long num, long den);

Integer binomial(long n, long k);
Integer factorial(long n);
Integer pow2(long e);

/// Parses "p/q", an integer, or a plain decimal ("1.7" -> 17/10) without
/// passing through floating point. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);

Rational abs(const Rational& q);
Rational from_double(double x);  // exact binary value of x
double to_double(const Rational& q);

}  // namespace unitcircle
