#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace isect {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

/// C(a, b), zero whenever b < 0, a < 0 or b > a.
inline ExactInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  ExactInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

inline ExactInt ipow(long base, long exp) {
  ExactInt r = 1;
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}

/// base^exp for possibly negative exp.
inline ExactRat rpow(long base, long exp) {
  if (exp >= 0) return ExactRat(ipow(base, exp));
  return ExactRat(ExactInt(1), ipow(base, -exp));
}

inline std::string to_string(const ExactInt& v) { return v.str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const ExactRat& v) {
  const ExactInt num = boost::multiprecision::numerator(v);
  const ExactInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace isect
