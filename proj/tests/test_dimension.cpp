#include <gtest/gtest.h>

#include <cmath>

#include "mea/dimension.hpp"
#include "mea/oracles.hpp"
#include "mea/verify.hpp"

namespace mea {
namespace {

TEST(Entropy, Examples) {
  EXPECT_EQ(entropy(0.5), 1.0);
  EXPECT_EQ(entropy(0.0), 0.0);
  EXPECT_EQ(entropy(1.0), 0.0);
  const double direct = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
  EXPECT_NEAR(entropy(0.75), direct, 1e-16);
  EXPECT_NEAR(entropy(0.75), 0.8112781244591328, 1e-15);
  EXPECT_THROW(entropy(-0.1), std::domain_error);
  EXPECT_THROW(entropy(1.1), std::domain_error);
  EXPECT_THROW(entropy(std::nan("")), std::domain_error);
}

TEST(Entropy, SymmetricWithMaximumAtHalf) {
  for (int i = 0; i <= 1000; ++i) {
    const double t = i / 1000.0;
    EXPECT_NEAR(entropy(t), entropy(1 - t), 1e-15);
    EXPECT_LE(entropy(t), 1.0);
  }
}

TEST(HausdorffDimension, Examples) {
  for (int ell = 1; ell <= 10; ++ell) {
    EXPECT_EQ(hausdorff_dimension_B(ell, 0.0).value, 1.0);
    EXPECT_EQ(hausdorff_dimension_B(ell, 0.0).tail_bound, 0.0);
  }
  EXPECT_EQ(hausdorff_dimension_B(2, 1.0).value, 0.5);
  EXPECT_EQ(hausdorff_dimension_B(2, -1.0).value, 0.5);
  EXPECT_NEAR(hausdorff_dimension_B(3, 0.5).value, 0.9370927081530442, 1e-15);
  for (int i = -100; i <= 100; ++i) {
    const double theta = i / 100.0;
    EXPECT_EQ(hausdorff_dimension_B(1, theta).value, entropy((1 + theta) / 2));
  }
  EXPECT_THROW(hausdorff_dimension_B(0, 0.1), std::domain_error);
  EXPECT_THROW(hausdorff_dimension_B(2, 1.01), std::domain_error);
}

TEST(HausdorffDimension, ShapeOfSpectrum) {
  for (int ell = 1; ell <= 6; ++ell) {
    double previous = 2.0;
    for (int i = 0; i <= 200; ++i) {
      const double theta = i / 200.0;
      const double v = hausdorff_dimension_B(ell, theta).value;
      EXPECT_NEAR(v, hausdorff_dimension_B(ell, -theta).value, 1e-15);
      EXPECT_GE(v, 1.0 - 1.0 / ell);
      EXPECT_LT(v, previous);
      previous = v;
    }
  }
}

TEST(Fibonacci, Examples) {
  const FibSequence fib = fibonacci(10);
  ASSERT_EQ(fib.size(), 11u);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(fib[k], BigCount(std::vector<int>{1, 2, 3, 5, 8}[k]));
  EXPECT_EQ(fib[10], 144);
  EXPECT_EQ(fibonacci(0).size(), 1u);
  for (std::size_t k = 2; k < fib.size(); ++k) EXPECT_EQ(fib[k], fib[k - 1] + fib[k - 2]);
}

TEST(Fibonacci, CountsStringsWithoutAdjacentOnes) {
  const FibSequence fib = fibonacci(20);
  for (std::size_t k = 0; k <= 20; ++k) EXPECT_EQ(fib[k], oracle::no_adjacent_ones(k)) << "k=" << k;
}

TEST(Fibonacci, ExceedsSixtyFourBits) {
  const FibSequence fib = fibonacci(200);
  EXPECT_GT(fib[100], BigCount(std::numeric_limits<std::uint64_t>::max()));
  for (std::size_t k = 1; k <= 200; ++k) EXPECT_LE(log2_big(fib[k]), static_cast<double>(k));
}

TEST(BoxDimension, Examples) {
  const auto one = box_dimension_X0(1);
  EXPECT_EQ(one.value, 0.25);
  EXPECT_EQ(one.tail_bound, 0.75);
  EXPECT_NEAR(box_dimension_X0(4).value, 0.6869908185206046, 1e-15);
  const auto full = box_dimension_X0(64);
  EXPECT_NEAR(full.value, 0.8242936, 5e-8);
  EXPECT_LE(full.tail_bound, 2e-18);
  EXPECT_THROW(box_dimension_X0(0), std::domain_error);
}

TEST(BoxDimension, TailBoundHolds) {
  EXPECT_TRUE(verify::check_box_series().passed);
  // The tail bound is itself the exact value of sum_{k>K} k/2^{k+1}.
  double tail = 0.0;
  for (int k = 200; k > 1; --k) tail += k / std::ldexp(1.0, k + 1);
  EXPECT_NEAR(tail, box_dimension_X0(1).tail_bound, 1e-15);
}

}  // namespace
}  // namespace mea
