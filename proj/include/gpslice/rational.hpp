#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gpslice {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;

// Parses "num" or "num/den" (optional leading sign). Throws InputError on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "num/den" or "num" form.
std::string to_string(const Rational& value);

}  // namespace gpslice
