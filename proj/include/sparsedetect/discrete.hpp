#pragma once
// Randomized p-values for the Poisson and binomial models. A discrete
// statistic S under a known null is mapped to an exactly-uniform p-value by
// drawing phi ~ Uniform(P(X < S), P(X <= S)) and returning 2*min(phi, 1-phi).

#include <cstdint>
#include <vector>

#include "sparsedetect/score.hpp"

namespace sparsedetect {

enum class DiscreteFamily { poisson, binomial };

/// Null distribution of a windowed sum: Poisson(mean) or Binomial(trials, p).
struct DiscreteNullSpec {
  DiscreteFamily family = DiscreteFamily::poisson;
  double poisson_mean = 0.0;     // poisson only
  std::int64_t trials = 0;       // binomial only
  double success_prob = 0.0;     // binomial only

  static DiscreteNullSpec poisson(double mean);
  static DiscreteNullSpec binomial(std::int64_t trials, double success_prob);
};

/// P(X < s), P(X > s) and P(X = s) under the null. The upper tail is
/// accumulated by direct summation from above so it keeps full relative
/// precision even when P(X <= s) is within rounding of 1.
struct CdfSplit {
  double below;  // P(X < s)
  double above;  // P(X > s)
  double mass;   // P(X = s)
};
CdfSplit discrete_cdf_at(const DiscreteNullSpec& null, std::int64_t s);

/// Randomized p-value: phi = P(X < s) + u * P(X = s), p = 2*min(phi, 1-phi),
/// clamped to [kPValueFloor, 1]. The randomization variable u in [0,1) is an
/// explicit argument; this function never draws randomness itself.
PValue discrete_pvalue(std::int64_t observed_sum, const DiscreteNullSpec& null, double u);

/// Precomputed pmf/cdf split table for one null spec, indexed by the observed
/// sum. Used by the streaming rules, which evaluate the same null for every
/// stream and time step. Sums beyond the table (total mass below ~1e-320)
/// report below = 1, above = mass = 0.
class DiscreteNullTable {
 public:
  explicit DiscreteNullTable(const DiscreteNullSpec& null);
  CdfSplit at(std::int64_t s) const {
    if (s < 0) return {0.0, 1.0, 0.0};
    if (s >= static_cast<std::int64_t>(mass_.size())) return {1.0, 0.0, 0.0};
    return {below_[s], above_[s], mass_[s]};
  }
  std::int64_t size() const { return static_cast<std::int64_t>(mass_.size()); }

 private:
  std::vector<double> mass_, below_, above_;
};

}  // namespace sparsedetect
