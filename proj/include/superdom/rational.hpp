#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superdom {

// The base scalar. Everything downstream is written against this alias and
// the helpers below, so a different exact scalar (e.g. dual numbers over Q)
// only has to provide the same surface.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

/// Canonical text: "-3/4", "2", "0".
std::string to_string(const Rational& value);

/// Accepts "n" or "n/d" with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

}  // namespace superdom
