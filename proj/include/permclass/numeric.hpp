#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace permclass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& q);

// Decimal approximation with the given number of fractional digits,
// rounded toward zero.
std::string to_decimal(const Rational& q, int digits);

double to_double(const Rational& q);

BigInt parse_bigint(std::string_view text);
Rational parse_rational(const std::string& text);

}  // namespace permclass
