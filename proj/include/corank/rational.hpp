#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace corank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, unsigned long exp);
Rational rational_pow(const Rational& base, unsigned long exp);

// "8", "-3", "1/3"; denominator always positive, fraction reduced.
std::string rational_to_string(const Rational& value);
Rational parse_rational(const std::string& text);

bool is_prime(long long value);

}  // namespace corank
