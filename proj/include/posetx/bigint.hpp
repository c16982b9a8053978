#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace posetx {

/// All counts are exact; extension counts overflow 64 bits already at
/// five points and moderate exponents.
using Int = boost::multiprecision::cpp_int;

inline Int pow_int(const Int& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  Int num = 1;
  for (unsigned i = 0; i < r; ++i) {
    num *= n - i;
    num /= i + 1;  // exact: prefix products of falling factorial / i!
  }
  return num;
}

}  // namespace posetx
