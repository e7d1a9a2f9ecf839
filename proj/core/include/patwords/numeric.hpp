#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace patwords {

// Exact arithmetic everywhere; counts overflow 64 bits quickly once
// n or k leave toy ranges.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int pow_int(Int base, unsigned long exp) {
  Int result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace patwords
