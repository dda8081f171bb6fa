#include "huberpath/median.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "huberpath/loss.hpp"

namespace huberpath {

double KinkProfile::unpenalized_deriv(double c) const {
  // Hinge form: base + sum_k step_k * max(0, c - v_k). Exact at kinks.
  double d = base_deriv;
  for (std::size_t k = 0; k < kinks.size(); ++k) {
    const double t = c - kinks[k];
    if (t > 0.0) d += slope_step[k] * t;
  }
  return d;
}

double KinkProfile::solve_crossing(double shift) const {
  // Walk segments left to right carrying the derivative value and the
  // current slope; the first kink where the shifted derivative turns
  // nonnegative brackets the root, which one affine solve then pins down.
  if (kinks.empty() || !(base_deriv + shift < 0.0))
    throw std::logic_error("solve_crossing: no sign change to the right");
  double value = base_deriv + shift;  // h at and left of kinks[0]
  double slope = 0.0;
  double prev_kink = kinks[0];
  for (std::size_t k = 0; k < kinks.size(); ++k) {
    const double here = value + slope * (kinks[k] - prev_kink);
    if (here >= 0.0) {
      // value < 0 at prev_kink and slope > 0 on this segment.
      return prev_kink - value / slope;
    }
    value = here;
    prev_kink = kinks[k];
    slope += slope_step[k];
  }
  throw std::logic_error("solve_crossing: derivative never reaches zero");
}

void KinkProfile::assign_from_pairs(
    std::vector<std::pair<double, double>>& pairs, double base) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  kinks.resize(pairs.size());
  slope_step.resize(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    kinks[k] = pairs[k].first;
    slope_step[k] = pairs[k].second;
  }
  base_deriv = base;
}

KinkProfile build_kinks(std::span<const double> samples, double delta) {
  if (!(delta > 0.0))
    throw std::invalid_argument("build_kinks: delta must be > 0");
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(2 * samples.size());
  for (double x : samples) {
    pairs.emplace_back(x - delta, 1.0);
    pairs.emplace_back(x + delta, -1.0);
  }
  KinkProfile profile;
  profile.assign_from_pairs(pairs,
                            -delta * static_cast<double>(samples.size()));
  return profile;
}

Subgradient derivative_at(const KinkProfile& profile, double c,
                          double lambda) {
  const double d = profile.unpenalized_deriv(c);
  if (c > 0.0) return {d + lambda, d + lambda};
  if (c < 0.0) return {d - lambda, d - lambda};
  return {d - lambda, d + lambda};
}

double huberized_median(std::span<const double> samples, double delta,
                        double lambda) {
  if (samples.empty())
    throw std::invalid_argument("huberized_median: empty sample");
  validate_config({delta, lambda});
  const KinkProfile profile = build_kinks(samples, delta);
  const double d0 = profile.unpenalized_deriv(0.0);
  if (std::fabs(d0) <= lambda) return 0.0;
  // d0 < -lambda: minimizer is right of zero, where |c| contributes +lambda
  // to the derivative; symmetric on the other side.
  const double shift = d0 < 0.0 ? lambda : -lambda;
  return profile.solve_crossing(shift);
}

}  // namespace huberpath
