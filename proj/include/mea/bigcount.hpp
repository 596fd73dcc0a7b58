#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mea {

// Nonnegative arbitrary-precision counts (word counts, Fibonacci terms, binomials).
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

// log2 of a positive big integer, accurate to double precision.
inline double log2_big(const BigCount& value) {
  if (value <= 0) {
    if (value == 0) return -std::numeric_limits<double>::infinity();
    throw std::domain_error("log2_big: negative argument");
  }
  const auto top = boost::multiprecision::msb(value);
  if (top < 63) return std::log2(value.convert_to<double>());
  const auto shift = top - 63;
  const BigCount head = value >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace mea
