#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pleth {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

/// Accepts "p", "-p", "p/q" with decimal integers; throws FormatError otherwise
/// (including a zero denominator). The result is canonicalized.
Rational parse_fraction(std::string_view text);

}  // namespace pleth
