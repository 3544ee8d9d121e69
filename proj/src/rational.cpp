#include "corank/rational.hpp"

#include <stdexcept>

namespace corank {

BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
  return Rational(big_pow(numerator(base), exp), big_pow(denominator(base), exp));
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + text + "' (expected NUM or NUM/DEN)");
  }
}

bool is_prime(long long value) {
  if (value < 2) return false;
  for (long long d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

}  // namespace corank
