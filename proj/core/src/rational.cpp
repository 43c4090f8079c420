#include "varjet/rational.hpp"

#include <stdexcept>

namespace varjet {

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent == 0) return Rational(1);
  bool invert = exponent < 0;
  unsigned e = invert ? static_cast<unsigned>(-(long long)exponent) : static_cast<unsigned>(exponent);
  Rational acc(1);
  Rational b = base;
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  if (invert) {
    if (acc == 0) throw std::domain_error("0 raised to a negative power");
    return Rational(1) / acc;
  }
  return acc;
}

std::string to_string(const Rational& q) {
  std::string s = rational_num(q).str();
  if (rational_den(q) != 1) {
    s += "/";
    s += rational_den(q).str();
  }
  return s;
}

}  // namespace varjet
