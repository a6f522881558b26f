#include "gbd/lambert.hpp"

#include <cmath>
#include <stdexcept>

namespace gbd {

namespace {

// Series around the branch point w(-1/e + q) in powers of p = sqrt(2 e q).
double branch_series(double p) {
  const double p2 = p * p;
  return -1.0 + p - p2 / 3.0 + (11.0 / 72.0) * p2 * p - (43.0 / 540.0) * p2 * p2 +
         (769.0 / 17280.0) * p2 * p2 * p;
}

}  // namespace

double lambert_w(double x) {
  if (std::isnan(x)) throw std::domain_error("lambert_w: NaN argument");
  const double branch = -std::exp(-1.0);
  if (x < branch) {
    if (x < branch - 1e-15) throw std::domain_error("lambert_w: argument below -1/e");
    x = branch;
  }
  if (x == 0.0) return 0.0;

  double w;
  if (x < 0.0) {
    const double p = std::sqrt(2.0 * std::exp(1.0) * (x - branch));
    w = branch_series(p);
    // The series alone is already past full residual accuracy here; Halley
    // steps are skipped because f'/f'' degenerate as w -> -1.
    if (x - branch < 1e-9) return w < -1.0 ? -1.0 : w;
  } else {
    w = std::log1p(x);
  }

  const double target = 1e-13 * (1.0 + std::abs(x));
  for (int i = 0; i < 50; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= target) break;
    const double wp1 = w + 1.0;
    // Halley step for f(w) = w e^w - x.
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    w -= f / denom;
  }
  return w < -1.0 ? -1.0 : w;
}

}  // namespace gbd
