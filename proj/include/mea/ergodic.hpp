#pragma once

// Multiple ergodic averages A_m(x) = (1/m) sum_{k<=m} x_k x_{2k} ... x_{ell k}
// along words, Monte Carlo checks under P_theta, and exact level-set counts.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mea/bigcount.hpp"
#include "mea/dyadic.hpp"
#include "mea/random.hpp"
#include "mea/riesz.hpp"

namespace mea {

struct AverageTrace {
  int ell = 1;
  std::size_t word_length = 0;
  std::vector<double> partial_averages;  // A_1..A_M, M = floor(word_length / ell)

  double last() const { return partial_averages.back(); }
};

inline AverageTrace multiple_average(const SignWord& word, int ell) {
  if (ell < 1) throw std::invalid_argument("multiple_average: ell must be >= 1");
  if (word.size() < static_cast<std::size_t>(ell))
    throw std::invalid_argument("multiple_average: word shorter than ell");
  AverageTrace trace{ell, word.size(), {}};
  const std::size_t m = word.size() / static_cast<std::size_t>(ell);
  trace.partial_averages.reserve(m);
  long long sum = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    sum += xi(word, k, ell);
    trace.partial_averages.push_back(static_cast<double>(sum) / static_cast<double>(k));
  }
  return trace;
}

struct LlnReport {
  std::size_t trials = 0;
  std::size_t n = 0;
  double theta = 0.0;
  double mean_of_averages = 0.0;
  double rms_deviation = 0.0;  // sqrt(mean (A_n - theta)^2)
  double max_deviation = 0.0;  // max |A_n - theta|
  std::vector<double> averages;  // A_n per trial, in trial order
};

// Sum of xi_1..xi_n over a word of length >= ell n.
inline long long xi_sum(const SignWord& word, int ell, std::size_t n) {
  long long sum = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    bool parity = false;
    for (std::size_t j = 1; j <= static_cast<std::size_t>(ell); ++j) parity ^= word.unchecked_bit(j * k);
    sum += parity ? -1 : 1;
  }
  return sum;
}

// Samples `trials` words of length ell*n from P_theta and records A_n for each.
// Trial t uses derive_seed(seed, t), so results do not depend on `workers`.
inline LlnReport lln_experiment(const RieszParams& params, std::size_t n, std::size_t trials, std::uint64_t seed,
                                unsigned workers = 0) {
  if (n < 1 || trials < 1) throw std::invalid_argument("lln_experiment: n and trials must be positive");
  LlnReport report;
  report.trials = trials;
  report.n = n;
  report.theta = params.theta();
  report.averages.assign(trials, 0.0);

  const std::size_t length = n * static_cast<std::size_t>(params.ell());
  const auto run = [&](std::size_t t) {
    const SignWord word = sample(params, length, derive_seed(seed, t));
    report.averages[t] = static_cast<double>(xi_sum(word, params.ell(), n)) / static_cast<double>(n);
  };
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) run(t);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += workers) run(t);
      });
  }

  double sum = 0.0;
  double squares = 0.0;
  for (double a : report.averages) {
    const double dev = a - params.theta();
    sum += a;
    squares += dev * dev;
    report.max_deviation = std::max(report.max_deviation, std::abs(dev));
  }
  report.mean_of_averages = sum / static_cast<double>(trials);
  report.rms_deviation = std::sqrt(squares / static_cast<double>(trials));
  return report;
}

// log2 P_theta(I_n(x)) / log2 |I_n(x)|. For P_theta-typical x this tends to
// 1 - 1/ell + H((1+theta)/2)/ell.
inline double local_dimension_estimate(const RieszParams& params, const SignWord& word) {
  if (word.size() < static_cast<std::size_t>(params.ell()))
    throw std::invalid_argument("local_dimension_estimate: word shorter than ell");
  const double log_mass = log2_cylinder_mass(params, word);
  if (log_mass == -std::numeric_limits<double>::infinity())
    throw NullConditioningError("local_dimension_estimate: word lies in a null cylinder");
  return log_mass / -static_cast<double>(word.size());
}

// Number of length-n sign words with xi_1 + ... + xi_m = s, m = floor(n/ell).
//
// (xi_1..xi_m) together with the n - m coordinates not of the form ell k are
// free: x_{ell k} = xi_k x_k x_{2k} ... x_{(ell-1)k} is recovered in increasing
// k, and every index on the right is either free or an earlier ell k'. Hence
// the count is C(m, (m+s)/2) 2^{n-m}, and 0 off the admissible set.
inline BigCount level_set_count(std::uint64_t n, int ell, long long s) {
  if (ell < 1 || n < static_cast<std::uint64_t>(ell))
    throw std::invalid_argument("level_set_count: requires 1 <= ell <= n");
  const std::uint64_t m = n / static_cast<std::uint64_t>(ell);
  const auto magnitude = static_cast<std::uint64_t>(s < 0 ? -s : s);
  if (magnitude > m || (m - magnitude) % 2 != 0) return 0;
  const auto plus = static_cast<std::uint64_t>((static_cast<long long>(m) + s) / 2);
  BigCount count = binomial(m, plus);
  count <<= static_cast<unsigned>(n - m);
  return count;
}

struct SpectrumPoint {
  long long s = 0;
  double theta = 0.0;  // s / m
  double rate = 0.0;   // log2(level_set_count) / n
};

inline double log2_binomial(std::uint64_t n, std::uint64_t k) {
  const auto lg = [](std::uint64_t x) { return std::lgamma(static_cast<double>(x) + 1.0); };
  return (lg(n) - lg(k) - lg(n - k)) / std::log(2.0);
}

// One point per admissible s in {-m, -m+2, ..., m}, via log-gamma.
inline std::vector<SpectrumPoint> empirical_spectrum(std::uint64_t n, int ell) {
  if (ell < 1 || n < static_cast<std::uint64_t>(ell))
    throw std::invalid_argument("empirical_spectrum: requires 1 <= ell <= n");
  const std::uint64_t m = n / static_cast<std::uint64_t>(ell);
  std::vector<SpectrumPoint> out;
  out.reserve(m + 1);
  for (std::uint64_t plus = 0; plus <= m; ++plus) {
    const long long s = 2 * static_cast<long long>(plus) - static_cast<long long>(m);
    const double log_count = log2_binomial(m, plus) + static_cast<double>(n - m);
    out.push_back({s, static_cast<double>(s) / static_cast<double>(m), log_count / static_cast<double>(n)});
  }
  return out;
}

}  // namespace mea
