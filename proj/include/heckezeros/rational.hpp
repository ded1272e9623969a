#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hz {

// Exact rationals. gmpxx keeps every arithmetic result canonical (lowest
// terms, positive denominator); values built from raw parts go through
// make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", with optional sign. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

double to_double(const Rational& r);

}  // namespace hz
