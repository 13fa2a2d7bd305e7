#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgeom {

/// Exact rational, always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parse `p/q` or an integer, with optional leading sign. Throws InputError.
Rational parse_rational(std::string_view text);

/// `p/q`, or just `p` when the denominator is 1.
std::string format_rational(const Rational& r);

}  // namespace cgeom
