#pragma once

namespace qwalk::detail {

// base^exponent for a nonnegative integer exponent; ipow(0, 0) == 1.
constexpr double ipow(double base, int exponent) {
  double result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace qwalk::detail
