#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sixv {

// Arbitrary-precision rational, always stored in lowest terms.
using Rational = mpq_class;

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

// Accepts the same forms; throws StructuralError on malformed input or
// zero denominator.
Rational rational_from_string(std::string_view text);

Rational rational_pow(const Rational& base, unsigned exp);

} // namespace sixv
