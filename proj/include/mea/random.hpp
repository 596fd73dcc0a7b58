#pragma once

#include <cstdint>

namespace mea {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: output i is a pure function of (seed, i), so a
// stream can be extended or entered at any position. The i-th output equals
// the i-th step of a SplitMix64 stream keyed by mix64(seed).
class CounterRng {
 public:
  constexpr explicit CounterRng(std::uint64_t seed) : key_(mix64(seed ^ kGoldenGamma)) {}

  constexpr std::uint64_t at(std::uint64_t counter) const {
    return mix64(key_ + (counter + 1) * kGoldenGamma);
  }

  // Uniform in [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

// Seed for the index-th independent sub-experiment of a run keyed by seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed + kGoldenGamma) ^ mix64(index * 0xd1b54a32d192ed03ULL + 1));
}

}  // namespace mea
