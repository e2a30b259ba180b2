#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace monobasis {

// GMP rationals are kept canonical (lowest terms, positive denominator) by
// every arithmetic operation; values built from a raw numerator/denominator
// pair must go through make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace monobasis
