#include "sparsedetect/normal.hpp"

#include <algorithm>
#include <cmath>

namespace sparsedetect {
namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kLogSqrt2Pi = 0.9189385332046727418;

// Lower tail Phi(-a) for large a via the Mills ratio continued fraction
//   Phi(-a) = phi(a) / (a + 1/(a + 2/(a + 3/(...)))),
// assembled in log space so the result stays accurate down to where doubles
// run out of exponent.
double lower_tail_large(double a) {
  double cf = 0.0;
  for (int j = 40; j >= 1; --j) cf = j / (a + cf);
  const double mills = 1.0 / (a + cf);
  const double log_p = -0.5 * a * a - kLogSqrt2Pi + std::log(mills);
  return std::exp(log_p);
}

}  // namespace

double std_normal_cdf(double x) {
  if (x < -27.0) return lower_tail_large(-x);
  return 0.5 * std::erfc(-x * kInvSqrt2);
}

PValue normal_two_sided(double z) {
  const double p = 2.0 * std_normal_cdf(-std::fabs(z));
  return PValue(std::clamp(p, kPValueFloor, 1.0));
}

PValue normal_one_sided(double z) {
  const double p = std_normal_cdf(-z);
  return PValue(std::clamp(p, kPValueFloor, 1.0));
}

}  // namespace sparsedetect
