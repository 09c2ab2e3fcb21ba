#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace bikehiker {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q" or "p"; throws Error(invalid_argument) on anything else.
Rational parse_rational(std::string_view text);

// Always "p/q" with q > 0, so integers print as "n/1".
std::string format_rational(const Rational& value);

}  // namespace bikehiker
