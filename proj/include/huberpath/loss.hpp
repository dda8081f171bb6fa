#pragma once

#include <cmath>
#include <span>

#include "huberpath/dataset.hpp"

namespace huberpath {

/// Huber loss: quadratic inside [-delta, delta], linear outside, with
/// matching value and slope at the transition.
inline double huber_value(double u, double delta) {
  const double a = std::fabs(u);
  if (a <= delta) return 0.5 * u * u;
  return delta * a - 0.5 * delta * delta;
}

/// Derivative of huber_value in u; clips to +/-delta outside the band.
inline double huber_deriv(double u, double delta) {
  if (u > delta) return delta;
  if (u < -delta) return -delta;
  return u;
}

/// Soft-threshold operator: shrinks v toward zero by tau, exactly zero
/// inside [-tau, tau].
inline double soft_threshold(double v, double tau) {
  if (v > tau) return v - tau;
  if (v < -tau) return v + tau;
  return 0.0;
}

/// Penalized objective F(beta) = (1/n) sum_i w_i huber(y_i - x_i' beta)
/// + lambda * ||beta||_1. Weights default to 1 when absent.
double objective(const Dataset& data, std::span<const double> beta,
                 const HuberConfig& config);

/// Same objective evaluated from residuals already in hand (unit weights).
double objective_from_residuals(std::span<const double> residuals,
                                std::span<const double> beta,
                                const HuberConfig& config);

}  // namespace huberpath
