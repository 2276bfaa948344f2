#pragma once
// Sparsity likelihood score: per-stream score l(p) and the aggregate over
// all streams. The score is a log perturbation of the uniform p-value
// density mixing a heavy-tail component f1 with a moderate-tail component f2.

#include <cmath>
#include <span>
#include <stdexcept>

namespace sparsedetect {

/// A p-value, validated to lie in (0, 1]. Zero is rejected: the score
/// diverges there, generators clamp to kPValueFloor instead.
class PValue {
 public:
  explicit PValue(double v) : v_(v) {
    if (!(v > 0.0) || v > 1.0)
      throw std::domain_error("PValue must lie in (0, 1]");
  }
  double value() const { return v_; }

 private:
  double v_;
};

/// Floor applied by all p-value producers before scoring.
inline constexpr double kPValueFloor = 1e-300;

/// Parameter bundle (N, lambda1, lambda2) for the sparsity likelihood score.
///
/// Construction validates N >= 2, lambda1 >= 0, lambda2 > 0 and positivity
/// of the score argument at p = 1. Since f1 and f2 are decreasing on (0,1],
/// p = 1 minimizes the argument, so the single check guarantees l(p) is
/// defined on all of (0,1].
class SparsityParams {
 public:
  SparsityParams(int num_streams, double lambda1, double lambda2);

  int num_streams() const { return n_; }
  double lambda1() const { return lambda1_; }
  double lambda2() const { return lambda2_; }

  // Cached weights: f1_weight = lambda1*log(N)/N, f2_weight = lambda2/sqrt(N*log N).
  double f1_weight() const { return f1w_; }
  double f2_weight() const { return f2w_; }

 private:
  int n_;
  double lambda1_, lambda2_;
  double f1w_, f2w_;
};

/// f1(p) = 1/(p*(2-log p)^2) - 1/2, decreasing on (0,1], integrates to 0.
double f1(PValue p);

/// f2(p) = 1/sqrt(p) - 2, decreasing on (0,1], integrates to 0.
double f2(PValue p);

/// Per-stream score l(p) = log(1 + f1_weight*f1(p) + f2_weight*f2(p)).
double stream_score(const SparsityParams& params, PValue p);

/// Sum of stream_score over the vector, stream index ascending. The order
/// is fixed so repeated runs produce bit-identical sums. No compensated
/// summation: at N <= 1e4 plain accumulation is well inside tolerance.
double aggregate_score(const SparsityParams& params, std::span<const double> pvec);

/// lambda2 = sqrt(log gamma / log log gamma); requires gamma > e^e.
double default_lambda2(double gamma);

}  // namespace sparsedetect
