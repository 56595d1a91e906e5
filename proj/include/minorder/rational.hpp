#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>

namespace minorder {

// All model coordinates are exact rationals. The constructions only ever emit
// small integers and half-steps, but user-supplied models may carry arbitrary
// fractions, so every inequality test must be exact.
using Rat = boost::rational<long long>;

// Parses "p", "-p" or "p/q". Throws InputError on anything else.
Rat parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string format_rational(const Rat& value);

}  // namespace minorder
