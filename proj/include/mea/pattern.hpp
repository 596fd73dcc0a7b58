#pragma once

// Words in {0,1}^n with x_l x_{2l} = 0 whenever 2l <= n.
//
// {1..n} splits into chains {q, 2q, 4q, ...} over odd q; the constraint only
// links neighbours inside a chain, so a chain of length L admits a_L fillings
// (no two adjacent ones) and the count is a product over chains.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "mea/bigcount.hpp"
#include "mea/dimension.hpp"

namespace mea {

// Finite word over {0,1}, 1-indexed.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
      if (b > 1) throw std::invalid_argument("BitWord: entries must be 0 or 1");
  }

  static BitWord parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
      if (c != '0' && c != '1') throw std::invalid_argument("BitWord: expected only 0/1");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitWord(std::move(bits));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  int operator[](std::size_t i) const { return bits_.at(i - 1); }

  // x_l x_{2l} = 0 for every l with 2l <= size().
  bool avoids_doubling_ones() const noexcept {
    for (std::size_t l = 1; 2 * l <= bits_.size(); ++l)
      if (bits_[l - 1] && bits_[2 * l - 1]) return false;
    return true;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

struct Chain {
  std::uint64_t odd = 1;
  int length = 1;

  std::vector<std::uint64_t> elements() const {
    std::vector<std::uint64_t> out;
    for (int i = 0; i < length; ++i) out.push_back(odd << i);
    return out;
  }
};

struct ChainDecomposition {
  std::uint64_t n = 0;
  int m = 0;                          // floor(log2 n)
  std::vector<std::uint64_t> counts;  // n_0 > n_1 > ... > n_m = 1
  std::vector<Chain> chains;          // one per odd q <= n, increasing q
};

// n_k = floor(n/2^{k+1} + 1/2) = floor((n + 2^k) / 2^{k+1}): the number of odd q
// with q 2^k <= n. Returns n_0..n_m.
inline std::vector<std::uint64_t> chain_counts(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("chain_counts: n must be >= 1");
  const int m = std::bit_width(n) - 1;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    // (n + 2^k) >> (k + 1) carries into bit k + 1 exactly when bit k of n is set.
    const std::uint64_t high = k + 1 < 64 ? n >> (k + 1) : 0;
    counts[static_cast<std::size_t>(k)] = high + ((n >> k) & 1U);
  }
  return counts;
}

inline ChainDecomposition chain_decomposition(std::uint64_t n) {
  ChainDecomposition d;
  d.n = n;
  d.counts = chain_counts(n);
  d.m = static_cast<int>(d.counts.size()) - 1;
  d.chains.reserve((n + 1) / 2);
  for (std::uint64_t q = 1; q <= n; q += 2)
    d.chains.push_back({q, static_cast<int>(std::bit_width(n / q))});  // floor(log2(n/q)) + 1
  return d;
}

namespace detail {

// Grouped product a_{m+1}^{n_m} a_m^{n_{m-1}-n_m} ... a_1^{n_0-n_1} for given n_k.
inline BigCount grouped_count(const std::vector<std::uint64_t>& counts) {
  const std::size_t m = counts.size() - 1;
  const FibSequence fib = fibonacci(m + 1);
  BigCount total = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    const std::uint64_t next = k < m ? counts[k + 1] : 0;
    if (counts[k] < next) throw std::logic_error("grouped_count: chain counts must be non-increasing");
    const std::uint64_t exponent = counts[k] - next;
    if (exponent > 0) total *= boost::multiprecision::pow(fib[k + 1], static_cast<unsigned>(exponent));
  }
  return total;
}

// prod over odd q <= n of a_{L(q)}, tallying chain lengths directly.
inline BigCount per_chain_count(std::uint64_t n) {
  std::map<int, std::uint64_t> by_length;
  for (std::uint64_t q = 1; q <= n; q += 2) ++by_length[std::bit_width(n / q)];
  const FibSequence fib = fibonacci(static_cast<std::size_t>(by_length.rbegin()->first));
  BigCount total = 1;
  for (const auto& [length, multiplicity] : by_length)
    total *= boost::multiprecision::pow(fib[static_cast<std::size_t>(length)], static_cast<unsigned>(multiplicity));
  return total;
}

}  // namespace detail

// N_n, computed both ways; a disagreement is an internal error.
inline BigCount count_exact(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("count_exact: n must be >= 1");
  BigCount grouped = detail::grouped_count(chain_counts(n));
  if (grouped != detail::per_chain_count(n))
    throw std::logic_error("count_exact: grouped and per-chain products disagree at n=" + std::to_string(n));
  return grouped;
}

class BudgetExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t kBruteForceMaxLength = 26;

// Enumerates all 2^n words (bit l-1 holds x_l) and tests each pair (l, 2l).
// The range is split across workers; the sum does not depend on the split.
inline BigCount count_brute_force(std::uint64_t n, unsigned workers = 0) {
  if (n < 1) throw std::invalid_argument("count_brute_force: n must be >= 1");
  if (n > kBruteForceMaxLength)
    throw BudgetExceededError("count_brute_force: n=" + std::to_string(n) + " exceeds enumeration budget of " +
                              std::to_string(kBruteForceMaxLength));
  const std::uint64_t total = std::uint64_t{1} << n;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::uint64_t> partial(workers, 0);
  const auto scan = [&](unsigned w) {
    const std::uint64_t lo = std::min(total, w * chunk);
    const std::uint64_t hi = std::min(total, lo + chunk);
    std::uint64_t found = 0;
    for (std::uint64_t word = lo; word < hi; ++word) {
      bool ok = true;
      for (std::uint64_t l = 1; 2 * l <= n && ok; ++l) ok = ((word >> (l - 1)) & (word >> (2 * l - 1)) & 1U) == 0;
      found += ok ? 1 : 0;
    }
    partial[w] = found;
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  std::uint64_t sum = 0;
  for (auto p : partial) sum += p;
  return BigCount(sum);
}

// log2(N_n) / n from chain-length groups; O(log n) and no big products.
inline double normalized_log_count(std::uint64_t n) {
  const auto counts = chain_counts(n);
  const std::size_t m = counts.size() - 1;
  const FibSequence fib = fibonacci(m + 1);
  double sum = 0.0;
  for (std::size_t k = 0; k <= m; ++k) {
    const std::uint64_t next = k < m ? counts[k + 1] : 0;
    sum += static_cast<double>(counts[k] - next) * log2_big(fib[k + 1]);
  }
  return sum / static_cast<double>(n);
}

}  // namespace mea
