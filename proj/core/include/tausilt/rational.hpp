#pragma once

#include <gmpxx.h>

#include <string>

namespace tausilt {

// Exact arithmetic over the rationals. mpq_class keeps gcd(num, den) = 1 and
// den > 0 after every canonicalized operation, which is exactly the Rational
// invariant this library relies on.
using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Int& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace tausilt
