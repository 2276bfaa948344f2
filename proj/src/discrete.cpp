#include "sparsedetect/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sparsedetect {
namespace {

// Smallest pmf kept when building tables; below this the remaining tail is
// unreachable in any simulation of realistic length.
constexpr double kPmfCutoff = 1e-320;

double pmf_start(const DiscreteNullSpec& null) {
  if (null.family == DiscreteFamily::poisson) return std::exp(-null.poisson_mean);
  return std::exp(static_cast<double>(null.trials) * std::log1p(-null.success_prob));
}

// pmf(s+1) from pmf(s); the forward recurrence is exact to rounding and
// avoids lgamma in the hot table build.
double pmf_step(const DiscreteNullSpec& null, std::int64_t s, double pmf_s) {
  if (null.family == DiscreteFamily::poisson)
    return pmf_s * null.poisson_mean / static_cast<double>(s + 1);
  const double odds = null.success_prob / (1.0 - null.success_prob);
  return pmf_s * static_cast<double>(null.trials - s) / static_cast<double>(s + 1) * odds;
}

std::int64_t support_end(const DiscreteNullSpec& null) {
  if (null.family == DiscreteFamily::binomial) return null.trials;
  return std::numeric_limits<std::int64_t>::max();
}

double null_mean(const DiscreteNullSpec& null) {
  if (null.family == DiscreteFamily::poisson) return null.poisson_mean;
  return static_cast<double>(null.trials) * null.success_prob;
}

}  // namespace

DiscreteNullSpec DiscreteNullSpec::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("poisson null: mean must be >= 0");
  DiscreteNullSpec s;
  s.family = DiscreteFamily::poisson;
  s.poisson_mean = mean;
  return s;
}

DiscreteNullSpec DiscreteNullSpec::binomial(std::int64_t trials, double success_prob) {
  if (trials < 1) throw std::invalid_argument("binomial null: trials must be >= 1");
  if (!(success_prob > 0.0) || !(success_prob < 1.0))
    throw std::invalid_argument("binomial null: success_prob must be in (0,1)");
  DiscreteNullSpec s;
  s.family = DiscreteFamily::binomial;
  s.trials = trials;
  s.success_prob = success_prob;
  return s;
}

CdfSplit discrete_cdf_at(const DiscreteNullSpec& null, std::int64_t s) {
  const std::int64_t end = support_end(null);
  if (s < 0) return {0.0, 1.0, 0.0};
  if (s > end) return {1.0, 0.0, 0.0};

  double below = 0.0, mass = 0.0;
  double pmf = pmf_start(null);
  for (std::int64_t j = 0; j < s; ++j) {
    below += pmf;
    pmf = pmf_step(null, j, pmf);
  }
  mass = pmf;

  // Upper tail summed term by term from s+1 up; stop once past the mode and
  // the terms no longer move the sum.
  double above = 0.0;
  const double mean = null_mean(null);
  for (std::int64_t j = s; j < end; ++j) {
    pmf = pmf_step(null, j, pmf);
    above += pmf;
    if (static_cast<double>(j + 1) > mean && (pmf < above * 1e-18 || pmf < kPmfCutoff)) break;
  }
  return {below, above, mass};
}

PValue discrete_pvalue(std::int64_t observed_sum, const DiscreteNullSpec& null, double u) {
  if (!(u >= 0.0) || !(u < 1.0))
    throw std::invalid_argument("discrete_pvalue: u must lie in [0,1)");
  const CdfSplit c = discrete_cdf_at(null, observed_sum);
  const double phi = c.below + u * c.mass;
  const double one_minus_phi = c.above + (1.0 - u) * c.mass;
  const double p = 2.0 * std::min(phi, one_minus_phi);
  return PValue(std::clamp(p, kPValueFloor, 1.0));
}

DiscreteNullTable::DiscreteNullTable(const DiscreteNullSpec& null) {
  const std::int64_t end = support_end(null);
  const double mean = null_mean(null);
  double pmf = pmf_start(null);
  std::int64_t j = 0;
  while (true) {
    mass_.push_back(pmf);
    if (j >= end) break;
    pmf = pmf_step(null, j, pmf);
    ++j;
    if (static_cast<double>(j) > mean && pmf < kPmfCutoff) {
      mass_.push_back(pmf);
      break;
    }
  }
  const std::size_t n = mass_.size();
  below_.resize(n);
  above_.resize(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    below_[i] = acc;
    acc += mass_[i];
  }
  double tail = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    above_[i] = tail;
    tail += mass_[i];
  }
}

}  // namespace sparsedetect
