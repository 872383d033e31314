#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace kms {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3", "5/2". Throws Error(ParseError) on malformed input or a
/// zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// q^e for integer e (negative allowed, q != 0).
Rational rational_pow(const Rational& q, long long e);

}  // namespace kms
