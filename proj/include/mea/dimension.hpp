#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mea/bigcount.hpp"

namespace mea {

struct DimensionValue {
  double value = 0.0;
  double tail_bound = 0.0;  // 0 for closed forms
};

// Binary entropy with 0 log 0 = 0 taken as a branch, so the endpoints are exact.
inline double entropy(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("entropy: argument must lie in [0, 1]");
  if (t == 0.0 || t == 1.0) return 0.0;
  return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
}

// dim_H of the level set {x : (1/n) sum_k x_k x_{2k} ... x_{ell k} -> theta}.
inline DimensionValue hausdorff_dimension_B(int ell, double theta) {
  if (ell < 1) throw std::domain_error("hausdorff_dimension_B: ell must be >= 1");
  if (!(theta >= -1.0 && theta <= 1.0)) throw std::domain_error("hausdorff_dimension_B: theta must lie in [-1, 1]");
  const double inv = 1.0 / static_cast<double>(ell);
  return {1.0 - inv + inv * entropy((1.0 + theta) / 2.0), 0.0};
}

// a_0 = 1, a_1 = 2, a_k = a_{k-1} + a_{k-2}: the number of length-k binary
// strings without two adjacent ones.
struct FibSequence {
  std::vector<BigCount> values;

  const BigCount& operator[](std::size_t k) const { return values.at(k); }
  std::size_t size() const noexcept { return values.size(); }
};

inline FibSequence fibonacci(std::size_t last) {
  FibSequence fib;
  fib.values.reserve(last + 1);
  fib.values.emplace_back(1);
  if (last >= 1) fib.values.emplace_back(2);
  for (std::size_t k = 2; k <= last; ++k) fib.values.push_back(fib.values[k - 1] + fib.values[k - 2]);
  return fib;
}

// Partial sum of sum_k log2(a_k) / 2^{k+1}. Since a_k <= 2^k the discarded
// tail is at most sum_{k>K} k / 2^{k+1} = (K+2) / 2^{K+1}.
inline DimensionValue box_dimension_X0(std::size_t terms) {
  if (terms < 1) throw std::domain_error("box_dimension_X0: terms must be >= 1");
  const FibSequence fib = fibonacci(terms);
  double sum = 0.0;
  for (std::size_t k = 1; k <= terms; ++k)
    sum += std::ldexp(log2_big(fib[k]), -static_cast<int>(k + 1));
  const double tail = std::ldexp(static_cast<double>(terms + 2), -static_cast<int>(terms + 1));
  return {sum, tail};
}

}  // namespace mea
