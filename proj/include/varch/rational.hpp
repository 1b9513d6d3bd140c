#pragma once

#include <gmpxx.h>

#include <string>

namespace varch {

using Int = mpz_class;

// Exact rational scalar, always kept in lowest terms with positive
// denominator (gmp canonical form).
using Rational = mpq_class;

// Parses "p" or "p/q" with decimal integers, optional leading '-' on p.
// Throws InputError on anything else (including a zero denominator).
Rational parse_rational(const std::string& text);

// Prints in the same shape parse_rational accepts: "p" or "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Int& z);

Rational rational_pow(const Rational& base, unsigned long exp);

}  // namespace varch
