#include "sparsedetect/score.hpp"

#include <cassert>

namespace sparsedetect {

SparsityParams::SparsityParams(int num_streams, double lambda1, double lambda2)
    : n_(num_streams), lambda1_(lambda1), lambda2_(lambda2) {
  if (num_streams < 2)
    throw std::invalid_argument("SparsityParams: num_streams must be >= 2");
  if (!(lambda1 >= 0.0) || !std::isfinite(lambda1))
    throw std::invalid_argument("SparsityParams: lambda1 must be >= 0");
  if (!(lambda2 > 0.0) || !std::isfinite(lambda2))
    throw std::invalid_argument("SparsityParams: lambda2 must be > 0");
  const double logn = std::log(static_cast<double>(n_));
  f1w_ = lambda1_ * logn / n_;
  f2w_ = lambda2_ / std::sqrt(n_ * logn);
  // Argument of the log at p = 1, the minimizer: f1(1) = -1/4, f2(1) = -1.
  const double arg_at_one = 1.0 - f1w_ / 4.0 - f2w_;
  if (!(arg_at_one > 0.0))
    throw std::domain_error(
        "SparsityParams: 1 - lambda1*log(N)/(4N) - lambda2/sqrt(N log N) must be positive");
}

double f1(PValue p) {
  const double v = p.value();
  const double d = 2.0 - std::log(v);
  return 1.0 / (v * d * d) - 0.5;
}

double f2(PValue p) { return 1.0 / std::sqrt(p.value()) - 2.0; }

double stream_score(const SparsityParams& params, PValue p) {
  const double arg = 1.0 + params.f1_weight() * f1(p) + params.f2_weight() * f2(p);
  // Unreachable for valid params: the argument is minimized at p = 1 where
  // construction already checked positivity.
  if (!(arg > 0.0))
    throw std::domain_error("stream_score: non-positive log argument");
  return std::log(arg);
}

double aggregate_score(const SparsityParams& params, std::span<const double> pvec) {
  if (static_cast<int>(pvec.size()) != params.num_streams())
    throw std::invalid_argument("aggregate_score: p-value vector length != num_streams");
  double sum = 0.0;
  for (double v : pvec) sum += stream_score(params, PValue(v));
  return sum;
}

double default_lambda2(double gamma) {
  // Needs log log gamma > 0, i.e. gamma > e^e.
  if (!(gamma > 15.154262241479262))
    throw std::domain_error("default_lambda2: gamma must exceed e^e");
  const double lg = std::log(gamma);
  return std::sqrt(lg / std::log(lg));
}

}  // namespace sparsedetect
