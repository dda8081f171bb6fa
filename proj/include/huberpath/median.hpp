#pragma once

#include <span>
#include <vector>

#include "huberpath/dataset.hpp"

namespace huberpath {

/// Piecewise-linear description of the derivative of a sum of shifted Huber
/// terms f_0(c) = sum_i s_i * huber(center_i - c; width_i). Each term
/// contributes two kinks at center_i -/+ width_i; between kinks the
/// derivative is affine in c with slope equal to the sum of the s_i whose
/// quadratic band covers the segment. Left of every kink the derivative is
/// the constant -sum_i s_i * width_i (every term saturated).
struct KinkProfile {
  std::vector<double> kinks;        ///< sorted ascending, two per term
  std::vector<double> slope_step;   ///< slope change when crossing kinks[k]
  double base_deriv = 0.0;          ///< derivative left of all kinks

  std::size_t size() const { return kinks.size(); }

  /// Exact derivative f_0'(c), evaluated by the clipped-hinge form rather
  /// than the segment walk; O(#terms) and valid at kink points.
  double unpenalized_deriv(double c) const;

  /// Leftmost c with f_0'(c) + shift = 0. The walk scans segments in
  /// ascending order, so when the derivative is flat at zero over an
  /// interval the left endpoint is returned. Requires base_deriv + shift
  /// < 0 and a nonnegative value past the last kink (a crossing exists);
  /// throws std::logic_error otherwise.
  double solve_crossing(double shift) const;

  /// Rebuilds the profile in place from unsorted (kink, slope-step) pairs;
  /// sorts `pairs` and reuses this profile's capacity. Each Huber term
  /// contributes (center - width, +slope) and (center + width, -slope);
  /// base is -sum_i slope_i * width_i.
  void assign_from_pairs(std::vector<std::pair<double, double>>& pairs,
                         double base);
};

/// Builds the profile of f_0(c) = sum_i huber(x_i - c; delta).
KinkProfile build_kinks(std::span<const double> samples, double delta);

/// Subdifferential of f_0(c) + lambda * |c| at c: an interval, a single
/// point unless c == 0.
struct Subgradient {
  double lo = 0.0;
  double hi = 0.0;
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
};

Subgradient derivative_at(const KinkProfile& profile, double c, double lambda);

/// Exact minimizer of sum_i huber(x_i - c; delta) + lambda * |c| over c.
/// Zero is returned whenever it is optimal; otherwise the solution is the
/// derivative's unique sign change, located by an ordered kink walk and one
/// affine solve. Errors on an empty sample.
double huberized_median(std::span<const double> samples, double delta,
                        double lambda = 0.0);

}  // namespace huberpath
