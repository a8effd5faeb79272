#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace medianlab {

using Rational = mpq_class;

/// Parses "p/q", "p", or a plain integer string; throws MedianError on junk
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when q == 1).
std::string format_rational(const Rational& r);

/// True iff r is 0 or 2^{-s} for some 0 <= s <= max_exponent.
bool is_dyadic_mass(const Rational& r, unsigned max_exponent);

}  // namespace medianlab
