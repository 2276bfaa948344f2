#pragma once
// Counter-based randomness. Every draw is a pure function of
// (master_seed, trial_index, tag, t, stream, window), so trials replay
// identically regardless of scheduling, and a trial can be re-simulated from
// scratch to extend it without storing engine state.

#include <cstdint>

namespace sparsedetect {

/// Identifies one trial's random stream.
struct SeededSource {
  std::uint64_t master_seed = 0;
  std::int64_t trial_index = 0;
};

/// Quantile function of the standard normal (Wichura's AS241, double
/// precision). u must lie in (0,1).
double inverse_normal_cdf(double u);

namespace rng_detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace rng_detail

class CounterRng {
 public:
  // Draw purposes; part of the counter so streams never collide.
  enum Tag : std::uint64_t {
    kObservation = 1,
    kSubset = 2,
    kWindowUniform = 3,
    kGeneric = 4,
  };

  explicit CounterRng(SeededSource src)
      : k1_(rng_detail::mix64(src.master_seed)),
        k2_(rng_detail::mix64(k1_ ^ rng_detail::mix64(static_cast<std::uint64_t>(src.trial_index) + 0x51ED270B4D7BD5ULL))) {}

  /// Uniform draw in the open interval (0,1).
  double uniform(Tag tag, std::int64_t t, std::int64_t n, std::int64_t k_index = 0) const {
    return to_unit(bits(tag, t, n, k_index));
  }

  /// Standard normal via the inverse CDF.
  double normal(Tag tag, std::int64_t t, std::int64_t n) const {
    return inverse_normal_cdf(uniform(tag, t, n));
  }

  std::uint64_t bits(Tag tag, std::int64_t t, std::int64_t n, std::int64_t k_index) const {
    // [tag:4][t:34][n:14][k:12]
    const std::uint64_t counter = (static_cast<std::uint64_t>(tag) << 60) |
                                  ((static_cast<std::uint64_t>(t) & 0x3FFFFFFFFULL) << 26) |
                                  ((static_cast<std::uint64_t>(n) & 0x3FFFULL) << 12) |
                                  (static_cast<std::uint64_t>(k_index) & 0xFFFULL);
    return rng_detail::mix64(rng_detail::mix64(counter ^ k1_) ^ k2_);
  }

 private:
  static double to_unit(std::uint64_t x) {
    // Centered on the 2^-53 grid: strictly inside (0,1).
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t k1_, k2_;
};

}  // namespace sparsedetect
