#pragma once

// Words over {+1,-1}, Walsh characters of the dyadic group and the
// observables xi_k(x) = x_k x_{2k} ... x_{ell k}.
//
// A sign x_i is stored as a bit b_i with x_i = 1 - 2 b_i, so sign products are
// parities and character multiplication is XOR of indices. Positions are
// 1-indexed everywhere in the public interface.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mea {

inline constexpr int kMaxFrequency = 64;

class SignWordBuilder;

// Immutable finite word over {+1,-1}; also names the cylinder of its prefix.
class SignWord {
 public:
  SignWord() = default;

  explicit SignWord(std::span<const int> signs) : length_(signs.size()) {
    blocks_.assign((length_ + 63) / 64, 0);
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (signs[i] == -1) {
        blocks_[i / 64] |= std::uint64_t{1} << (i % 64);
      } else if (signs[i] != 1) {
        throw std::invalid_argument("SignWord: entries must be +1 or -1");
      }
    }
  }

  SignWord(std::initializer_list<int> signs)
      : SignWord(std::span<const int>(signs.begin(), signs.size())) {}

  // Accepts "+-+" or the bit form "010" (0 is +1, 1 is -1).
  static SignWord parse(std::string_view text) {
    const bool sign_form = text.find_first_of("+-") != std::string_view::npos;
    std::vector<int> signs;
    signs.reserve(text.size());
    for (char c : text) {
      if (sign_form && c == '+') {
        signs.push_back(1);
      } else if (sign_form && c == '-') {
        signs.push_back(-1);
      } else if (!sign_form && c == '0') {
        signs.push_back(1);
      } else if (!sign_form && c == '1') {
        signs.push_back(-1);
      } else {
        throw std::invalid_argument("SignWord: cannot parse '" + std::string(text) +
                                    "' (use +/- or 0/1, not mixed)");
      }
    }
    return SignWord(signs);
  }

  static SignWord all_plus(std::size_t length) {
    SignWord w;
    w.length_ = length;
    w.blocks_.assign((length + 63) / 64, 0);
    return w;
  }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  // b_i for 1 <= i <= size(); true means x_i = -1.
  bool bit(std::size_t i) const {
    check_position(i);
    return unchecked_bit(i);
  }

  int sign(std::size_t i) const { return bit(i) ? -1 : 1; }

  // Packed b_1..b_min(64,n) with b_i at bit i-1.
  std::uint64_t low_bits() const noexcept { return blocks_.empty() ? 0 : blocks_.front(); }

  SignWord extended(int s) const {
    if (s != 1 && s != -1) throw std::invalid_argument("SignWord: entries must be +1 or -1");
    SignWord w = *this;
    if (w.length_ % 64 == 0) w.blocks_.push_back(0);
    if (s == -1) w.blocks_[w.length_ / 64] |= std::uint64_t{1} << (w.length_ % 64);
    ++w.length_;
    return w;
  }

  SignWord prefix(std::size_t n) const {
    if (n > length_) throw std::out_of_range("SignWord::prefix: longer than word");
    SignWord w;
    w.length_ = n;
    w.blocks_.assign(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>((n + 63) / 64));
    if (n % 64 != 0) w.blocks_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    return w;
  }

  std::vector<int> signs() const {
    std::vector<int> out(length_);
    for (std::size_t i = 0; i < length_; ++i) out[i] = unchecked_bit(i + 1) ? -1 : 1;
    return out;
  }

  std::string to_string() const {
    std::string s(length_, '+');
    for (std::size_t i = 0; i < length_; ++i)
      if (unchecked_bit(i + 1)) s[i] = '-';
    return s;
  }

  std::string to_bit_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (unchecked_bit(i + 1)) s[i] = '1';
    return s;
  }

  friend bool operator==(const SignWord&, const SignWord&) = default;

  bool unchecked_bit(std::size_t i) const noexcept {
    return (blocks_[(i - 1) / 64] >> ((i - 1) % 64)) & 1U;
  }

 private:
  friend class SignWordBuilder;

  void check_position(std::size_t i) const {
    if (i == 0 || i > length_) throw std::out_of_range("SignWord: position out of range");
  }

  std::vector<std::uint64_t> blocks_;
  std::size_t length_ = 0;
};

// Append-only construction for long words (samplers); finish() yields the value.
class SignWordBuilder {
 public:
  void reserve(std::size_t n) { word_.blocks_.reserve((n + 63) / 64); }

  void push(bool minus) {
    if (word_.length_ % 64 == 0) word_.blocks_.push_back(0);
    if (minus) word_.blocks_.back() |= std::uint64_t{1} << (word_.length_ % 64);
    ++word_.length_;
  }

  std::size_t size() const noexcept { return word_.length_; }
  bool bit(std::size_t i) const noexcept { return word_.unchecked_bit(i); }

  SignWord finish() && { return std::move(word_); }

 private:
  SignWord word_;
};

// Walsh character w_n, n = sum_j 2^{n_j - 1}.
class DyadicCharacter {
 public:
  constexpr DyadicCharacter() = default;
  constexpr explicit DyadicCharacter(std::uint64_t index) : index_(index) {}

  static DyadicCharacter from_frequencies(std::span<const int> frequencies) {
    std::uint64_t index = 0;
    int previous = 0;
    for (int f : frequencies) {
      if (f <= previous || f > kMaxFrequency)
        throw std::invalid_argument("DyadicCharacter: frequencies must be strictly increasing in [1, 64]");
      index |= std::uint64_t{1} << (f - 1);
      previous = f;
    }
    return DyadicCharacter(index);
  }

  constexpr std::uint64_t index() const noexcept { return index_; }

  // Largest frequency n_s, 0 for the constant character.
  constexpr int max_frequency() const noexcept { return std::bit_width(index_); }

  std::vector<int> frequencies() const {
    std::vector<int> out;
    for (std::uint64_t rest = index_; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest) + 1);
    return out;
  }

  constexpr DyadicCharacter operator*(DyadicCharacter other) const noexcept {
    return DyadicCharacter(index_ ^ other.index_);
  }

  friend constexpr bool operator==(DyadicCharacter, DyadicCharacter) = default;

 private:
  std::uint64_t index_ = 0;
};

// xi_k(x) = x_k x_{2k} ... x_{ell k}. Requires ell*k <= size(word).
inline int xi(const SignWord& word, std::size_t k, int ell) {
  if (k == 0 || ell < 1) throw std::invalid_argument("xi: k and ell must be positive");
  if (k > word.size() / static_cast<std::size_t>(ell))
    throw std::out_of_range("xi: ell*k exceeds word length; extend the word");
  bool parity = false;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(ell); ++j) parity ^= word.unchecked_bit(j * k);
  return parity ? -1 : 1;
}

inline int walsh(const SignWord& word, DyadicCharacter character) {
  if (static_cast<std::size_t>(character.max_frequency()) > word.size())
    throw std::out_of_range("walsh: frequency exceeds word length");
  return (std::popcount(word.low_bits() & character.index()) & 1) ? -1 : 1;
}

// Walsh index of xi_k: sum_{j=1..ell} 2^{jk-1}.
inline std::uint64_t xi_character_index(std::uint64_t k, int ell) {
  if (k == 0 || ell < 1) throw std::invalid_argument("xi_character_index: k and ell must be positive");
  if (k > static_cast<std::uint64_t>(kMaxFrequency) / static_cast<std::uint64_t>(ell))
    throw std::overflow_error("xi_character_index: ell*k exceeds 64-bit character width");
  std::uint64_t index = 0;
  for (std::uint64_t j = 1; j <= static_cast<std::uint64_t>(ell); ++j) index |= std::uint64_t{1} << (j * k - 1);
  return index;
}

// The n-cylinder I(x_1..x_n): all points extending prefix, diameter 2^-n.
struct Cylinder {
  SignWord prefix;

  std::size_t depth() const noexcept { return prefix.size(); }
  // Exact diameter as a power of two exponent.
  long diameter_log2() const noexcept { return -static_cast<long>(prefix.size()); }
  double diameter() const noexcept {
    return std::ldexp(1.0, static_cast<int>(std::max<long>(diameter_log2(), std::numeric_limits<int>::min())));
  }

  bool contains(const SignWord& word) const {
    return word.size() >= prefix.size() && word.prefix(prefix.size()) == prefix;
  }
};

// Index of the first disagreeing coordinate over the common length, if any.
inline std::optional<std::size_t> first_difference(const SignWord& x, const SignWord& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 1; i <= n; ++i)
    if (x.unchecked_bit(i) != y.unchecked_bit(i)) return i;
  return std::nullopt;
}

// rho(x, y) = 2^-min{k : x_k != y_k}; 0 when the words agree on their common length.
inline double distance(const SignWord& x, const SignWord& y) {
  const auto k = first_difference(x, y);
  return k ? std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(*k, 1100))) : 0.0;
}

}  // namespace mea
