#ifndef TAFFY_RATIONAL_HPP
#define TAFFY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace taffy {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical representative of x mod 1 in [0, 1).
Rat mod1(const Rat& x);

/// Parses "3", "-2/5", "1/6". Throws Error on malformed input or zero denominator.
Rat parse_fraction(const std::string& text);

/// "num/den" (or just "num" when den == 1).
std::string format_fraction(const Rat& q);

/// Natural log of a positive integer, accurate for arbitrary magnitude.
double log_int(const Int& n);

}  // namespace taffy

#endif
