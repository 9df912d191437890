#pragma once

#include <gmpxx.h>

#include <string>

namespace betticone {

// Exact rational arithmetic. All quantities in this library are held as
// arbitrary-precision rationals in lowest terms with positive denominator;
// mpq_class canonicalizes on construction and after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

// den must be nonzero.
Rational make_rational(long num, long den = 1);

// Accepts "p" or "p/q" with optional leading '-' on p. Throws
// BettiError(errc::syntax_error) on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical form: "p/q", or just "p" when q == 1.
std::string to_string(const Rational& value);

Integer int_pow(const Integer& base, unsigned long exp);
Integer factorial(unsigned long n);

double approx(const Rational& value);

}  // namespace betticone
