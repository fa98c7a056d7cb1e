#include "estimate/regression.h"

#include <cmath>

#include "core/errors.h"

namespace tonesearch {

RegressionLine fit_pair_regression(std::span<const PairSample> samples) {
  const std::size_t m = samples.size();
  if (m < 2) throw DegenerateInputError("regression needs at least two samples");

  double sum_x = 0.0, sum_y = 0.0;
  for (const PairSample& s : samples) {
    sum_x += s.x_prev;
    sum_y += s.x_next;
  }
  const double mean_x = sum_x / static_cast<double>(m);
  const double mean_y = sum_y / static_cast<double>(m);

  double sxx = 0.0, sxy = 0.0;
  for (const PairSample& s : samples) {
    const double dx = s.x_prev - mean_x;
    sxx += dx * dx;
    sxy += dx * (s.x_next - mean_y);
  }
  if (sxx == 0.0) throw DegenerateInputError("regression needs variation in x_prev");

  RegressionLine line;
  line.count = static_cast<int>(m);
  line.gradient = sxy / sxx;
  line.intercept = mean_y - line.gradient * mean_x;

  double ssr = 0.0;
  for (const PairSample& s : samples) {
    const double r = s.x_next - (line.gradient * s.x_prev + line.intercept);
    ssr += r * r;
  }
  // With two points the fit is exact; the residual variance is zero rather
  // than 0/0.
  const double s2 = m > 2 ? ssr / static_cast<double>(m - 2) : 0.0;
  line.se_gradient = std::sqrt(s2 / sxx);
  line.se_intercept = std::sqrt(s2 * (1.0 / static_cast<double>(m) + mean_x * mean_x / sxx));
  return line;
}

ScalingParams derive_dschang_params(const RegressionLine& hl, const RegressionLine& ldh) {
  const double d = hl.gradient * ldh.gradient;
  if (!(d > 0.0 && d < 1.0)) {
    throw InconsistencyError("derived d outside (0,1)");
  }
  const double l = hl.intercept / (1.0 - d);
  const double h = l * ldh.gradient;
  if (!(l > 0.0) || !(h > 0.0)) {
    throw InconsistencyError("derived baselines must be positive");
  }
  return ScalingParams{h, l, d};
}

}  // namespace tonesearch
