#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace permhom {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& v);

/// Accepts "p", "-p" and "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long long num, long long den = 1) { return Rational(Integer(num), Integer(den)); }

}  // namespace permhom
