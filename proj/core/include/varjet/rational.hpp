#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace varjet {

/// Exact arbitrary-precision rational; the only coefficient type used by
/// the symbolic layer. No floats ever enter an Expr.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer rational_den(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// q^e for any integer exponent (e < 0 inverts; 0^negative is the caller's
/// problem and asserts via division).
Rational rational_pow(const Rational& base, int exponent);

/// "3", "-3/4" — numerator first, no spaces.
std::string to_string(const Rational& q);

}  // namespace varjet
