#pragma once

// Oracle cross-check suites behind `mea verify`. Each check records its
// tolerance, the worst observed discrepancy and, on failure, the first
// offending instance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mea/dimension.hpp"
#include "mea/dyadic.hpp"
#include "mea/ergodic.hpp"
#include "mea/oracles.hpp"
#include "mea/pattern.hpp"
#include "mea/riesz.hpp"

namespace mea::verify {

enum class Level { quick, full };

struct CheckResult {
  std::string name;
  std::string tolerance;
  std::string observed;
  bool passed = true;
  std::string failure;  // first offending instance
};

using CountFn = std::function<BigCount(std::uint64_t)>;

namespace detail {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Tracks the worst |error| and the first instance exceeding tolerance.
class Tracker {
 public:
  explicit Tracker(double tolerance) : tolerance_(tolerance) {}

  void observe(double error, const std::string& instance) {
    if (std::isnan(error)) error = std::numeric_limits<double>::infinity();
    worst_ = std::max(worst_, error);
    if (error > tolerance_ && failure_.empty()) failure_ = instance + " (error " + sci(error) + ")";
  }

  CheckResult result(std::string name) const {
    return {std::move(name), "<= " + sci(tolerance_), "max error " + sci(worst_), failure_.empty(), failure_};
  }

 private:
  double tolerance_;
  double worst_ = 0.0;
  std::string failure_;
};

inline SignWord word_of(std::uint64_t code, std::size_t length) {
  return SignWord(oracle::signs_of(code, length));
}

inline std::string params_text(int ell, double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "ell=%d theta=%g", ell, theta);
  return buf;
}

}  // namespace detail

inline const std::vector<double>& theta_grid() {
  static const std::vector<double> grid{0.0, 0.25, -0.25, 0.5, -0.5, 0.9, -0.9, 1.0, -1.0};
  return grid;
}

// Sum of cylinder masses over all 2^n prefixes equals 1.
inline CheckResult check_normalization(std::size_t max_n, const std::vector<int>& ells,
                                       const std::vector<double>& thetas) {
  detail::Tracker tracker(1e-12);
  for (int ell : ells)
    for (double theta : thetas) {
      const RieszParams params(ell, theta);
      for (std::size_t n = 0; n <= max_n; ++n) {
        // Extended accumulator: a plain double sum of 2^16 terms drifts by ~1e-12 on its own.
        long double total = 0.0L;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code)
          total += cylinder_mass(params, detail::word_of(code, n));
        tracker.observe(static_cast<double>(std::abs(total - 1.0L)), detail::params_text(ell, theta) + " n=" + std::to_string(n));
      }
    }
  return tracker.result("normalization: sum of cylinder masses = 1 (n <= " + std::to_string(max_n) + ")");
}

// mass(prefix) = mass(prefix+) + mass(prefix-).
inline CheckResult check_consistency(std::size_t max_n) {
  detail::Tracker tracker(1e-14);
  for (int ell : {1, 2, 3, 4})
    for (double theta : theta_grid()) {
      const RieszParams params(ell, theta);
      for (std::size_t n = 0; n <= max_n; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
          const SignWord w = detail::word_of(code, n);
          const double split = cylinder_mass(params, w.extended(1)) + cylinder_mass(params, w.extended(-1));
          tracker.observe(std::abs(cylinder_mass(params, w) - split),
                          detail::params_text(ell, theta) + " prefix=" + w.to_string());
        }
    }
  return tracker.result("Kolmogorov consistency of cylinder masses (n <= " + std::to_string(max_n) + ")");
}

inline CheckResult check_conditional_chain(std::size_t max_n) {
  detail::Tracker tracker(1e-12);
  for (int ell : {1, 2, 3})
    for (double theta : theta_grid()) {
      const RieszParams params(ell, theta);
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << max_n); ++code) {
        const SignWord w = detail::word_of(code, max_n);
        if (cylinder_mass(params, w) == 0.0) continue;
        double product = 1.0;
        for (std::size_t i = 0; i < max_n; ++i) product *= conditional_prob_next(params, w.prefix(i), w.sign(i + 1));
        tracker.observe(std::abs(product - cylinder_mass(params, w)),
                        detail::params_text(ell, theta) + " word=" + w.to_string());
      }
    }
  return tracker.result("cylinder mass = product of conditional probabilities (n = " + std::to_string(max_n) + ")");
}

inline CheckResult check_fourier(std::uint64_t index_limit, const std::vector<int>& ells,
                                 const std::vector<double>& thetas) {
  detail::Tracker tracker(1e-12);
  for (int ell : ells)
    for (double theta : thetas) {
      const RieszParams params(ell, theta);
      for (std::uint64_t index = 0; index < index_limit; ++index) {
        const double greedy = fourier_coefficient(params, DyadicCharacter(index));
        tracker.observe(std::abs(greedy - oracle::fourier_by_summation(index, ell, theta)),
                        detail::params_text(ell, theta) + " index=" + std::to_string(index));
      }
    }
  return tracker.result("Fourier coefficients vs exact summation (indices < " + std::to_string(index_limit) + ")");
}

// E[xi_j xi_k] = theta^2 for j != k, by exact summation.
inline CheckResult check_xi_orthogonality(std::size_t max_position) {
  detail::Tracker tracker(1e-12);
  for (int ell : {1, 2, 3})
    for (double theta : {0.3, -0.6, 0.9}) {
      const std::size_t top = max_position / static_cast<std::size_t>(ell);
      for (std::size_t j = 1; j <= top; ++j) {
        for (std::size_t k = j + 1; k <= top; ++k)
          tracker.observe(std::abs(oracle::xi_pair_expectation(j, k, ell, theta) - theta * theta),
                          detail::params_text(ell, theta) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
      }
    }
  return tracker.result("E[xi_j xi_k] = theta^2 for j != k (ell*k <= " + std::to_string(max_position) + ")");
}

inline CheckResult check_count_exact(std::uint64_t max_n, const CountFn& count = count_exact) {
  CheckResult r{"count_exact(n) = brute-force enumeration (n <= " + std::to_string(max_n) + ")", "exact", "", true, ""};
  std::uint64_t checked = 0;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const BigCount fast = count(n);
    const BigCount brute = count_brute_force(n);
    ++checked;
    if (fast != brute) {
      r.passed = false;
      r.failure = "n=" + std::to_string(n) + ": count " + to_decimal(fast) + " != brute force " + to_decimal(brute);
      break;
    }
  }
  r.observed = std::to_string(checked) + " values compared";
  return r;
}

// Grouped exponent formula against the per-chain product.
inline CheckResult check_grouped_vs_per_chain(const std::vector<std::uint64_t>& grid) {
  CheckResult r{"grouped product = per-chain product (spot grid)", "exact", "", true, ""};
  for (std::uint64_t n : grid) {
    if (mea::detail::grouped_count(chain_counts(n)) != mea::detail::per_chain_count(n)) {
      r.passed = false;
      r.failure = "n=" + std::to_string(n);
      break;
    }
  }
  r.observed = std::to_string(grid.size()) + " values compared";
  return r;
}

inline CheckResult check_chain_invariants(std::uint64_t max_n) {
  CheckResult r{"chain decomposition invariants (n <= " + std::to_string(max_n) + ")", "exact", "", true, ""};
  for (std::uint64_t n = 1; n <= max_n && r.passed; ++n) {
    const ChainDecomposition d = chain_decomposition(n);
    std::string problem;
    if (d.counts.back() != 1) problem = "n_m != 1";
    for (std::size_t k = 1; k < d.counts.size() && problem.empty(); ++k)
      if (d.counts[k] > d.counts[k - 1]) problem = "counts increase with k";
    std::uint64_t total = 0;
    std::vector<std::uint64_t> at_least(d.counts.size() + 1, 0);
    std::vector<char> seen(n + 1, 0);
    for (const Chain& c : d.chains) {
      total += static_cast<std::uint64_t>(c.length);
      for (int k = 0; k < c.length; ++k) ++at_least[static_cast<std::size_t>(k)];
      for (std::uint64_t e : c.elements()) {
        if (e > n || seen[e]) problem = "chains do not partition {1..n}";
        else seen[e] = 1;
      }
    }
    if (total != n) problem = "sum of chain lengths != n";
    for (std::size_t k = 0; k < d.counts.size() && problem.empty(); ++k)
      if (at_least[k] != d.counts[k]) problem = "#chains of length > k != n_k";
    if (!problem.empty()) {
      r.passed = false;
      r.failure = "n=" + std::to_string(n) + ": " + problem;
    }
  }
  r.observed = r.passed ? "all hold" : "violated";
  return r;
}

inline CheckResult check_level_set_counts(std::size_t max_n) {
  CheckResult r{"level_set_count = enumeration (n <= " + std::to_string(max_n) + ", ell in {1,2,3})", "exact", "",
                true, ""};
  for (int ell : {1, 2, 3})
    for (std::size_t n = static_cast<std::size_t>(ell); n <= max_n && r.passed; ++n) {
      const auto counts = oracle::level_set_counts(n, ell);
      const auto m = static_cast<long long>(n / static_cast<std::size_t>(ell));
      for (long long s = -m - 1; s <= m + 1; ++s) {
        const auto it = counts.find(s);
        const BigCount expected = it == counts.end() ? BigCount(0) : BigCount(it->second);
        const BigCount got = level_set_count(n, ell, s);
        if (got != expected) {
          r.passed = false;
          r.failure = "n=" + std::to_string(n) + " ell=" + std::to_string(ell) + " s=" + std::to_string(s) + ": " +
                      to_decimal(got) + " != " + to_decimal(expected);
          break;
        }
      }
    }
  r.observed = r.passed ? "all equal" : "mismatch";
  return r;
}

inline CheckResult check_fibonacci(std::size_t max_k) {
  CheckResult r{"a_k = #binary strings without adjacent ones (k <= " + std::to_string(max_k) + ")", "exact", "",
                true, ""};
  const FibSequence fib = fibonacci(max_k);
  for (std::size_t k = 0; k <= max_k; ++k)
    if (fib[k] != oracle::no_adjacent_ones(k)) {
      r.passed = false;
      r.failure = "k=" + std::to_string(k);
      break;
    }
  r.observed = r.passed ? "all equal" : "mismatch";
  return r;
}

inline CheckResult check_normalized_log_count(std::uint64_t max_n) {
  detail::Tracker tracker(1e-9);
  for (std::uint64_t n = 1; n <= max_n; ++n)
    tracker.observe(std::abs(normalized_log_count(n) - log2_big(count_exact(n)) / static_cast<double>(n)),
                    "n=" + std::to_string(n));
  return tracker.result("normalized_log_count = log2(count_exact)/n (n <= " + std::to_string(max_n) + ")");
}

inline CheckResult check_box_series() {
  detail::Tracker tracker(0.0);
  for (std::size_t terms = 1; terms <= 48; ++terms) {
    const DimensionValue a = box_dimension_X0(terms);
    const DimensionValue b = box_dimension_X0(terms + 16);
    tracker.observe(std::max(0.0, std::abs(a.value - b.value) - a.tail_bound), "terms=" + std::to_string(terms));
  }
  return tracker.result("box-dimension series within its tail bound (terms <= 48)");
}

inline std::vector<CheckResult> run(Level level, const CountFn& count = count_exact) {
  const bool full = level == Level::full;
  std::vector<CheckResult> out;
  out.push_back(check_normalization(full ? 16 : 12, {1, 2, 3, 4}, theta_grid()));
  out.push_back(check_consistency(full ? 12 : 9));
  out.push_back(check_conditional_chain(full ? 12 : 8));
  out.push_back(check_fourier(full ? 1024 : 256, {2, 3}, {0.3, 0.9}));
  out.push_back(check_xi_orthogonality(full ? 14 : 10));
  out.push_back(check_count_exact(full ? 26 : 20, count));
  std::vector<std::uint64_t> grid;
  for (std::uint64_t n = 1; n <= 200; ++n) grid.push_back(n);
  for (std::uint64_t n : {1000ULL, 4096ULL, 10000ULL, 65537ULL, 100000ULL}) grid.push_back(n);
  if (full) grid.push_back(1000000);
  out.push_back(check_grouped_vs_per_chain(grid));
  out.push_back(check_chain_invariants(full ? 100000 : 2000));
  out.push_back(check_level_set_counts(full ? 18 : 14));
  out.push_back(check_fibonacci(full ? 20 : 16));
  out.push_back(check_normalized_log_count(full ? 10000 : 1000));
  out.push_back(check_box_series());
  return out;
}

}  // namespace mea::verify
