#pragma once

// The Riesz product P_theta = prod_k (1 + theta xi_k(x)) dx on {+1,-1}^N.
//
// A function of the first n coordinates only sees the factors k <= floor(n/ell),
// so the mass of an n-cylinder is the finite product
//
//   P_theta(I_n(x)) = 2^-n prod_{k=1}^{floor(n/ell)} (1 + theta xi_k(x)).
//
// Everything here is derived from that identity.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mea/dyadic.hpp"
#include "mea/random.hpp"

namespace mea {

// Multiplicity ell >= 1 and level theta in [-1, 1]. theta = 0 is Haar measure.
class RieszParams {
 public:
  RieszParams(int ell, double theta) : ell_(ell), theta_(theta) {
    if (ell < 1) throw std::invalid_argument("RieszParams: ell must be >= 1");
    if (!(theta >= -1.0 && theta <= 1.0)) throw std::invalid_argument("RieszParams: theta must lie in [-1, 1]");
  }

  int ell() const noexcept { return ell_; }
  double theta() const noexcept { return theta_; }

 private:
  int ell_;
  double theta_;
};

// Raised when conditioning on a cylinder of P_theta-mass zero.
class NullConditioningError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct XiTally {
  std::size_t plus = 0;
  std::size_t minus = 0;
};

// Counts of xi_k = +1 and xi_k = -1 for k = 1..floor(n/ell).
inline XiTally tally_xi(const SignWord& word, int ell) {
  XiTally t;
  const std::size_t m = word.size() / static_cast<std::size_t>(ell);
  for (std::size_t k = 1; k <= m; ++k) {
    bool parity = false;
    for (std::size_t j = 1; j <= static_cast<std::size_t>(ell); ++j) parity ^= word.unchecked_bit(j * k);
    ++(parity ? t.minus : t.plus);
  }
  return t;
}

inline double log2_cylinder_mass(const RieszParams& params, const SignWord& prefix);

// Direct product for short prefixes, log space beyond (where 2^-n underflows).
inline double cylinder_mass(const RieszParams& params, const SignWord& prefix) {
  if (prefix.size() > 512) return std::exp2(log2_cylinder_mass(params, prefix));
  const XiTally t = tally_xi(prefix, params.ell());
  const double theta = params.theta();
  double product = 1.0;
  for (std::size_t k = 0; k < t.plus; ++k) product *= 1.0 + theta;
  for (std::size_t k = 0; k < t.minus; ++k) product *= 1.0 - theta;
  return std::ldexp(product, -static_cast<int>(prefix.size()));
}

// log2 of the cylinder mass without underflow; -inf exactly when a factor vanishes.
inline double log2_cylinder_mass(const RieszParams& params, const SignWord& prefix) {
  const XiTally t = tally_xi(prefix, params.ell());
  const double theta = params.theta();
  if ((t.plus > 0 && theta == -1.0) || (t.minus > 0 && theta == 1.0))
    return -std::numeric_limits<double>::infinity();
  double log_mass = -static_cast<double>(prefix.size());
  if (t.plus > 0) log_mass += static_cast<double>(t.plus) * std::log2(1.0 + theta);
  if (t.minus > 0) log_mass += static_cast<double>(t.minus) * std::log2(1.0 - theta);
  return log_mass;
}

namespace detail {

// P(x_{n+1} = +1 | x_1..x_n) given bit access to the first n coordinates.
template <typename BitAccess>
double plus_probability(const RieszParams& params, const BitAccess& bit, std::size_t n) {
  const auto ell = static_cast<std::size_t>(params.ell());
  const std::size_t next = n + 1;
  if (next % ell != 0) return 0.5;
  const std::size_t m = next / ell;
  bool parity = false;
  for (std::size_t j = 1; j < ell; ++j) parity ^= bit(j * m);
  const double context = parity ? -1.0 : 1.0;
  return 0.5 * (1.0 + params.theta() * context);
}

}  // namespace detail

// P_theta(I_{n+1}) / P_theta(I_n) for x_{n+1} = candidate. The two candidates
// sum to exactly 1: the minus branch is computed as the complement.
inline double conditional_prob_next(const RieszParams& params, const SignWord& prefix, int candidate) {
  if (candidate != 1 && candidate != -1) throw std::invalid_argument("conditional_prob_next: candidate must be +1 or -1");
  if (log2_cylinder_mass(params, prefix) == -std::numeric_limits<double>::infinity())
    throw NullConditioningError("conditional_prob_next: prefix " + prefix.to_string() + " has zero mass");
  const double p_plus =
      detail::plus_probability(params, [&](std::size_t i) { return prefix.unchecked_bit(i); }, prefix.size());
  return candidate == 1 ? p_plus : 1.0 - p_plus;
}

// Exact sequential sampler. Coordinate i consumes output i-1 of a counter
// generator keyed by seed: x_i = +1 iff uniform < P(x_i = +1 | past). Prefixes
// of a longer sample equal shorter samples with the same seed.
inline SignWord sample(const RieszParams& params, std::size_t length, std::uint64_t seed) {
  const CounterRng rng(seed);
  SignWordBuilder builder;
  builder.reserve(length);
  const auto bit = [&](std::size_t i) { return builder.bit(i); };
  for (std::size_t n = 0; n < length; ++n) {
    const double p_plus = detail::plus_probability(params, bit, n);
    builder.push(!(rng.uniform(n) < p_plus));
  }
  return std::move(builder).finish();
}

// hat P_theta(n) = theta^|S| when w_n = prod_{k in S} xi_k, else 0.
// S is recovered greedily: the top frequency M of what remains must be ell*k
// for the largest k in S, since xi_k has top frequency ell*k.
inline double fourier_coefficient(const RieszParams& params, DyadicCharacter character) {
  std::uint64_t rest = character.index();
  int factors = 0;
  const auto ell = static_cast<std::uint64_t>(params.ell());
  while (rest != 0) {
    const auto top = static_cast<std::uint64_t>(std::bit_width(rest));
    if (top % ell != 0) return 0.0;
    rest ^= xi_character_index(top / ell, params.ell());
    ++factors;
  }
  double value = 1.0;
  for (int i = 0; i < factors; ++i) value *= params.theta();
  return value;
}

// Coefficients g_0, g_1, ... of g(t) = sum g_n t^n, plus a bound on the
// absolute sum of any coefficients left out.
struct PowerSeriesCoeffs {
  std::vector<double> coeffs;
  double truncation_bound = 0.0;
};

struct Estimate {
  double value = 0.0;
  double error_bound = 0.0;
};

// E_theta[g(xi_k)] = sum g_{2n} + theta sum g_{2n-1}, since xi_k^2 = 1.
inline Estimate expectation_g(const RieszParams& params, const PowerSeriesCoeffs& g) {
  if (!(g.truncation_bound >= 0.0) || !std::isfinite(g.truncation_bound))
    throw std::invalid_argument("expectation_g: truncation_bound must be finite and >= 0");
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t n = 0; n < g.coeffs.size(); ++n) {
    if (!std::isfinite(g.coeffs[n])) throw std::invalid_argument("expectation_g: coefficients must be finite");
    (n % 2 == 0 ? even : odd) += g.coeffs[n];
  }
  return {even + params.theta() * odd, g.truncation_bound};
}

}  // namespace mea
