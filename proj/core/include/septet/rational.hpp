#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace septet {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p/q", integer strings and finite decimals ("-0.125", "3.5e-2");
// decimals are converted exactly. Throws Error{ParseError}.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

}  // namespace septet
