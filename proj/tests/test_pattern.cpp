#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mea/pattern.hpp"
#include "mea/verify.hpp"

namespace mea {
namespace {

TEST(BitWord, Constraint) {
  EXPECT_TRUE(BitWord::parse("0110").avoids_doubling_ones());
  EXPECT_TRUE(BitWord::parse("1001").avoids_doubling_ones());
  EXPECT_FALSE(BitWord::parse("11").avoids_doubling_ones());
  EXPECT_FALSE(BitWord::parse("0101").avoids_doubling_ones());
  EXPECT_THROW(BitWord::parse("012"), std::invalid_argument);
}

TEST(ChainDecomposition, Examples) {
  const auto d8 = chain_decomposition(8);
  EXPECT_EQ(d8.m, 3);
  EXPECT_EQ(d8.counts, (std::vector<std::uint64_t>{4, 2, 1, 1}));
  ASSERT_EQ(d8.chains.size(), 4u);
  EXPECT_EQ(d8.chains[0].elements(), (std::vector<std::uint64_t>{1, 2, 4, 8}));
  EXPECT_EQ(d8.chains[1].elements(), (std::vector<std::uint64_t>{3, 6}));
  EXPECT_EQ(d8.chains[2].elements(), (std::vector<std::uint64_t>{5}));
  EXPECT_EQ(d8.chains[3].elements(), (std::vector<std::uint64_t>{7}));

  const auto d1 = chain_decomposition(1);
  EXPECT_EQ(d1.m, 0);
  EXPECT_EQ(d1.counts, (std::vector<std::uint64_t>{1}));
  ASSERT_EQ(d1.chains.size(), 1u);
  EXPECT_EQ(d1.chains[0].length, 1);

  const auto d3 = chain_decomposition(3);
  EXPECT_EQ(d3.m, 1);
  EXPECT_EQ(d3.counts, (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(d3.chains[0].elements(), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(d3.chains[1].elements(), (std::vector<std::uint64_t>{3}));
}

TEST(ChainDecomposition, CountsMatchRoundingFormula) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto counts = chain_counts(n);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      const double p = std::ldexp(1.0, static_cast<int>(k) + 1);
      ASSERT_EQ(counts[k], static_cast<std::uint64_t>(std::floor(static_cast<double>(n) / p + 0.5)));
      ASSERT_EQ(counts[k], (n + (std::uint64_t{1} << k)) >> (k + 1));
    }
  }
  const std::uint64_t huge = ~std::uint64_t{0};
  EXPECT_EQ(chain_counts(huge).front(), std::uint64_t{1} << 63);
  EXPECT_EQ(chain_counts(huge).back(), 1u);
}

TEST(ChainDecomposition, Invariants) {
  const auto r = verify::check_chain_invariants(3000);
  EXPECT_TRUE(r.passed) << r.failure;
}

TEST(CountExact, Examples) {
  EXPECT_EQ(count_exact(1), 2);
  EXPECT_EQ(count_exact(2), 3);
  EXPECT_EQ(count_exact(3), 6);
  EXPECT_EQ(count_exact(4), 10);
  EXPECT_EQ(count_exact(8), 96);
  EXPECT_EQ(count_exact(8), 8 * 3 * 2 * 2);
}

TEST(CountBruteForce, Examples) {
  EXPECT_EQ(count_brute_force(1), 2);
  EXPECT_EQ(count_brute_force(2), 3);
  EXPECT_EQ(count_brute_force(4), 10);
  EXPECT_THROW(count_brute_force(27), BudgetExceededError);
}

TEST(CountBruteForce, AgreesWithBitWordPredicate) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::uint64_t found = 0;
    for (std::uint64_t code = 0; code < (1u << n); ++code) {
      std::vector<std::uint8_t> bits(n);
      for (std::size_t i = 0; i < n; ++i) bits[i] = (code >> i) & 1U;
      found += BitWord(bits).avoids_doubling_ones();
    }
    EXPECT_EQ(count_brute_force(n), found);
  }
}

TEST(CountBruteForce, IndependentOfWorkerCount) {
  for (unsigned workers : {1u, 2u, 3u, 7u}) EXPECT_EQ(count_brute_force(18, workers), count_exact(18));
}

TEST(CountExact, MatchesBruteForce) {
  const auto r = verify::check_count_exact(20);
  EXPECT_TRUE(r.passed) << r.failure;
}

TEST(CountExact, GroupedAndPerChainAgreeOnSpotGrid) {
  std::vector<std::uint64_t> grid;
  for (std::uint64_t n = 1; n <= 300; ++n) grid.push_back(n);
  for (std::uint64_t n : {1023u, 1024u, 1025u, 99999u, 131072u, 1000000u}) grid.push_back(n);
  const auto r = verify::check_grouped_vs_per_chain(grid);
  EXPECT_TRUE(r.passed) << r.failure;
}

// n_k = floor(n / 2^{k+1}) drops the rounding term; the count check must catch it.
TEST(CountExact, VerificationCatchesMissingHalfInChainCounts) {
  const auto truncated_counts = [](std::uint64_t n) {
    std::vector<std::uint64_t> counts = chain_counts(n);
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] = n >> (k + 1);
    return counts;
  };
  const verify::CountFn buggy = [&](std::uint64_t n) { return detail::grouped_count(truncated_counts(n)); };
  EXPECT_EQ(buggy(3), 2);
  EXPECT_EQ(count_exact(3), 6);
  const auto r = verify::check_count_exact(20, buggy);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.failure, "n=1: count 1 != brute force 2");
}

TEST(NormalizedLogCount, Examples) {
  EXPECT_EQ(normalized_log_count(1), 1.0);
  EXPECT_NEAR(normalized_log_count(8), std::log2(96.0) / 8, 1e-15);
  EXPECT_NEAR(normalized_log_count(8), 0.8231203125901445, 1e-15);
  EXPECT_NEAR(normalized_log_count(1u << 20), 0.8242936, 5e-3);
}

TEST(NormalizedLogCount, MatchesExactCount) {
  const auto r = verify::check_normalized_log_count(2000);
  EXPECT_TRUE(r.passed) << r.failure;
}

TEST(NormalizedLogCount, ConvergesToSeries) {
  const double limit = box_dimension_X0(64).value;
  EXPECT_LE(std::abs(normalized_log_count(1u << 16) - limit), 1e-2);
  EXPECT_LE(std::abs(normalized_log_count(1u << 20) - limit), 5e-3);
  double previous = 1.0;
  for (int e : {10, 14, 18, 20}) {
    const double gap = std::abs(normalized_log_count(std::uint64_t{1} << e) - limit);
    EXPECT_LE(gap, previous) << "n=2^" << e;
    previous = gap;
  }
}

}  // namespace
}  // namespace mea
