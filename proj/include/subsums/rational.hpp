#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace subsums {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, always with a denominator ("7/1", "-1/2").
std::string format_rational(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace subsums
