#pragma once
// Standard normal CDF and the p-value maps used by the normal-model rules.

#include "sparsedetect/score.hpp"

namespace sparsedetect {

/// Phi(x). Accurate over the whole double range: erfc in the bulk, a
/// log-space Mills-ratio continued fraction in the deep lower tail where
/// erfc would lose precision to subnormals.
double std_normal_cdf(double x);

/// Two-sided p-value 2*Phi(-|z|), clamped to [kPValueFloor, 1].
PValue normal_two_sided(double z);

/// One-sided p-value Phi(-z), clamped to [kPValueFloor, 1].
PValue normal_one_sided(double z);

}  // namespace sparsedetect
