#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "mea/dyadic.hpp"
#include "mea/oracles.hpp"

namespace mea {
namespace {

SignWord word_of(std::uint64_t code, std::size_t length) { return SignWord(oracle::signs_of(code, length)); }

TEST(SignWord, ParsesBothSpellings) {
  const SignWord a = SignWord::parse("+-+");
  const SignWord b = SignWord::parse("010");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.sign(1), 1);
  EXPECT_EQ(a.sign(2), -1);
  EXPECT_EQ(a.to_string(), "+-+");
  EXPECT_EQ(a.to_bit_string(), "010");
  EXPECT_TRUE(SignWord::parse("").empty());
}

TEST(SignWord, RejectsMalformedInput) {
  EXPECT_THROW(SignWord::parse("+0"), std::invalid_argument);
  EXPECT_THROW(SignWord::parse("+x"), std::invalid_argument);
  EXPECT_THROW(SignWord({1, 0, -1}), std::invalid_argument);
  EXPECT_THROW(SignWord({1}).sign(2), std::out_of_range);
  EXPECT_THROW(SignWord({1}).sign(0), std::out_of_range);
}

TEST(SignWord, ExtensionLeavesOriginalUntouched) {
  const SignWord w{1, -1};
  const SignWord longer = w.extended(-1);
  EXPECT_EQ(w.to_string(), "+-");
  EXPECT_EQ(longer.to_string(), "+--");
  EXPECT_EQ(longer.prefix(2), w);
}

TEST(SignWord, PackingAcrossBlockBoundaries) {
  std::mt19937_64 rng(7);
  std::vector<int> signs(200);
  for (auto& s : signs) s = (rng() & 1) ? -1 : 1;
  const SignWord w(signs);
  SignWord grown;
  for (int s : signs) grown = grown.extended(s);
  EXPECT_EQ(w, grown);
  EXPECT_EQ(w.signs(), signs);
  for (std::size_t n : {0u, 63u, 64u, 65u, 128u, 199u}) EXPECT_EQ(w.prefix(n).signs(), std::vector<int>(signs.begin(), signs.begin() + n));
}

TEST(Xi, Examples) {
  EXPECT_EQ(xi(SignWord{1, -1}, 1, 2), -1);
  const SignWord ones = SignWord::all_plus(4);
  for (int ell = 1; ell <= 4; ++ell)
    for (std::size_t k = 1; k * static_cast<std::size_t>(ell) <= 4; ++k) EXPECT_EQ(xi(ones, k, ell), 1);
  // ell = 1 gives the Rademacher function r_k(x) = x_k.
  const SignWord w{-1, 1, -1};
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(xi(w, k, 1), w.sign(k));
}

TEST(Xi, OutOfRangeAsksForLongerWord) {
  EXPECT_THROW(xi(SignWord{1, 1, 1}, 2, 2), std::out_of_range);
  EXPECT_THROW(xi(SignWord{1}, 0, 1), std::invalid_argument);
}

TEST(Walsh, Examples) {
  EXPECT_EQ(walsh(SignWord{}, DyadicCharacter(0)), 1);
  EXPECT_EQ(walsh(SignWord{-1, -1, 1}, DyadicCharacter(0)), 1);
  EXPECT_EQ(walsh(SignWord{1, -1}, DyadicCharacter(3)), -1);
  EXPECT_EQ(walsh(SignWord{-1, 1, -1}, DyadicCharacter(5)), 1);
  EXPECT_THROW(walsh(SignWord{1, 1}, DyadicCharacter(4)), std::out_of_range);
}

TEST(DyadicCharacter, FrequenciesAreSetBits) {
  EXPECT_TRUE(DyadicCharacter(0).frequencies().empty());
  EXPECT_EQ(DyadicCharacter(5).frequencies(), (std::vector<int>{1, 3}));
  EXPECT_EQ(DyadicCharacter(9).max_frequency(), 4);
  const std::vector<int> f{1, 4};
  EXPECT_EQ(DyadicCharacter::from_frequencies(f).index(), 9u);
  const std::vector<int> bad{3, 2};
  EXPECT_THROW(DyadicCharacter::from_frequencies(bad), std::invalid_argument);
  const std::vector<int> too_high{65};
  EXPECT_THROW(DyadicCharacter::from_frequencies(too_high), std::invalid_argument);
}

TEST(XiCharacterIndex, Examples) {
  EXPECT_EQ(xi_character_index(1, 2), 3u);
  EXPECT_EQ(xi_character_index(1, 1), 1u);
  EXPECT_EQ(xi_character_index(2, 2), 10u);
  EXPECT_EQ(xi_character_index(32, 2), (std::uint64_t{1} << 31) | (std::uint64_t{1} << 63));
  EXPECT_THROW(xi_character_index(33, 2), std::overflow_error);
  EXPECT_THROW(xi_character_index(22, 3), std::overflow_error);
}

// walsh(., index of xi_k) agrees with xi_k on every word, for all ell k <= 16.
TEST(XiCharacterIndex, MatchesXiExhaustively) {
  for (int ell = 1; ell <= 16; ++ell)
    for (std::size_t k = 1; k * static_cast<std::size_t>(ell) <= 16; ++k) {
      const std::size_t length = k * static_cast<std::size_t>(ell);
      const DyadicCharacter ch(xi_character_index(k, ell));
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code) {
        const SignWord w = word_of(code, length);
        ASSERT_EQ(walsh(w, ch), xi(w, k, ell)) << "ell=" << ell << " k=" << k << " word=" << w.to_string();
      }
    }
}

TEST(Walsh, CharactersMultiplyByXor) {
  constexpr std::size_t length = 12;
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 64; ++trial) {
    const SignWord w = word_of(rng() & 0xfff, length);
    for (std::uint64_t a = 0; a < 4096; a += 7)
      for (std::uint64_t b = 0; b < 4096; b += 13)
        ASSERT_EQ(walsh(w, DyadicCharacter(a)) * walsh(w, DyadicCharacter(b)), walsh(w, DyadicCharacter(a ^ b)));
  }
}

TEST(Walsh, UniformAverageIsIndicatorOfZero) {
  constexpr std::size_t length = 10;
  for (std::uint64_t index = 0; index < (1u << length); ++index) {
    long long sum = 0;
    for (std::uint64_t code = 0; code < (1u << length); ++code) sum += walsh(word_of(code, length), DyadicCharacter(index));
    ASSERT_EQ(sum, index == 0 ? (1 << length) : 0) << "index=" << index;
  }
}

TEST(Cylinder, DiameterAndMembership) {
  const Cylinder c{SignWord::parse("+-")};
  EXPECT_EQ(c.diameter_log2(), -2);
  EXPECT_DOUBLE_EQ(c.diameter(), 0.25);
  EXPECT_TRUE(c.contains(SignWord::parse("+--+")));
  EXPECT_FALSE(c.contains(SignWord::parse("++")));
  EXPECT_FALSE(c.contains(SignWord::parse("+")));
  EXPECT_DOUBLE_EQ(Cylinder{}.diameter(), 1.0);
}

TEST(Metric, FirstDifference) {
  EXPECT_DOUBLE_EQ(distance(SignWord::parse("++-"), SignWord::parse("+--")), 0.25);
  EXPECT_DOUBLE_EQ(distance(SignWord::parse("-"), SignWord::parse("+")), 0.5);
  EXPECT_DOUBLE_EQ(distance(SignWord::parse("+-"), SignWord::parse("+-")), 0.0);
}

}  // namespace
}  // namespace mea
