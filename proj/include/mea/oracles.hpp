#pragma once

// Brute-force references used by the verification suites and tests. These
// work on plain sign vectors and enumerate everything; they share no code with
// the production paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace mea::oracle {

// Signs of the word whose bits (bit i-1 = 1 means x_i = -1) are `code`.
inline std::vector<int> signs_of(std::uint64_t code, std::size_t length) {
  std::vector<int> x(length);
  for (std::size_t i = 0; i < length; ++i) x[i] = ((code >> i) & 1U) ? -1 : 1;
  return x;
}

inline int xi_of(const std::vector<int>& x, std::size_t k, int ell) {
  int p = 1;
  for (int j = 1; j <= ell; ++j) p *= x[static_cast<std::size_t>(j) * k - 1];
  return p;
}

// 2^-L prod_{k=1}^{factors} (1 + theta xi_k) for an explicit word of length L.
inline long double partial_product_density(const std::vector<int>& x, int ell, double theta, std::size_t factors) {
  long double d = 1.0L;
  for (std::size_t k = 1; k <= factors; ++k) d *= 1.0L + static_cast<long double>(theta) * xi_of(x, k, ell);
  return std::ldexp(d, -static_cast<int>(x.size()));
}

// Mass of the cylinder `prefix` under the N-th partial product P_N(x) dx,
// integrating over every extension to length max(|prefix|, ell N).
inline double partial_product_integral(const std::vector<int>& prefix, int ell, double theta, std::size_t factors) {
  const std::size_t n = prefix.size();
  const std::size_t length = std::max(n, static_cast<std::size_t>(ell) * factors);
  long double total = 0.0L;
  for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << (length - n)); ++tail) {
    std::vector<int> x = prefix;
    const auto rest = signs_of(tail, length - n);
    x.insert(x.end(), rest.begin(), rest.end());
    total += partial_product_density(x, ell, theta, factors);
  }
  return static_cast<double>(total);
}

inline double direct_cylinder_mass(const std::vector<int>& prefix, int ell, double theta) {
  return static_cast<double>(partial_product_density(prefix, ell, theta, prefix.size() / static_cast<std::size_t>(ell)));
}

// sum over all words of length L = top frequency of mass(word) * w_index(word).
inline double fourier_by_summation(std::uint64_t index, int ell, double theta) {
  std::size_t length = 0;
  while (length < 64 && (index >> length) != 0) ++length;
  double total = 0.0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code) {
    const auto x = signs_of(code, length);
    int w = 1;
    for (std::size_t i = 0; i < length; ++i)
      if ((index >> i) & 1U) w *= x[i];
    total += direct_cylinder_mass(x, ell, theta) * w;
  }
  return total;
}

// E_theta[xi_j xi_k] by summation over words of length ell max(j, k).
inline double xi_pair_expectation(std::size_t j, std::size_t k, int ell, double theta) {
  const std::size_t length = static_cast<std::size_t>(ell) * std::max(j, k);
  double total = 0.0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code) {
    const auto x = signs_of(code, length);
    total += direct_cylinder_mass(x, ell, theta) * xi_of(x, j, ell) * xi_of(x, k, ell);
  }
  return total;
}

// s -> #{length-n sign words with sum_{k <= n/ell} xi_k = s}.
inline std::map<long long, std::uint64_t> level_set_counts(std::size_t n, int ell) {
  std::map<long long, std::uint64_t> counts;
  const std::size_t m = n / static_cast<std::size_t>(ell);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    const auto x = signs_of(code, n);
    long long s = 0;
    for (std::size_t k = 1; k <= m; ++k) s += xi_of(x, k, ell);
    ++counts[s];
  }
  return counts;
}

inline std::uint64_t no_adjacent_ones(std::size_t length) {
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code)
    if ((code & (code >> 1)) == 0) ++count;
  return count;
}

}  // namespace mea::oracle
