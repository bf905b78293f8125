#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace inca {

// Exact rational used for every probability in the engine.
using Rational = mpq_class;

// Parses "1", "0.25", "3/8" (optionally signed). Decimals are exact:
// "0.1" is 1/10. Throws std::invalid_argument on malformed input.
Rational parseRational(std::string_view text);

// Renders a canonical rational. Values whose reduced denominator has only
// the prime factors 2 and 5 print as terminating decimals ("0.375", "1"),
// everything else prints as "num/den".
std::string formatRational(const Rational& value);

}  // namespace inca
