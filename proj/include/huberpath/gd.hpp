#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "huberpath/dataset.hpp"
#include "huberpath/path.hpp"

namespace huberpath {

/// Gradient of the smooth loss f(beta) = (1/n) sum_i huber(y_i - x_i'beta):
/// g = -(1/n) X' psi(residuals).
std::vector<double> gd_gradient(const Dataset& data,
                                std::span<const double> beta, double delta);

/// Largest eigenvalue of X'X / n estimated by power iteration with a
/// seeded random start; stops when the Rayleigh quotient changes by less
/// than 1e-10 (relative) or after max_iters. Errors on an all-zero design.
double power_iteration_lmax(const Dataset& data, int max_iters = 1000,
                            std::uint64_t seed = 7);

struct GdConfig {
  double step_inverse = 0.0;  ///< L; any value >= the loss's curvature bound
  double tol = 1e-7;
  int max_iters = 100000;
};

struct GdReport {
  int iterations = 0;
  bool converged = false;
  double final_max_delta = 0.0;
  std::vector<double> objective_trace;  ///< F after every iteration
};

/// Proximal gradient descent: beta <- soft_threshold(beta - g/L, lambda/L),
/// stopping on the same scaled max-change rule as the coordinate solver.
/// Returns the last iterate (descent is monotone at a valid L, so the last
/// iterate is the best) with converged=false when iterations run out.
std::pair<std::vector<double>, GdReport> gd_solve(const Dataset& data,
                                                  const HuberConfig& config,
                                                  const GdConfig& gd,
                                                  std::vector<double> beta0);

/// Warm-started proximal gradient over a decreasing grid, one L for the
/// whole path. Reports carry iteration counts in place of sweeps; the
/// certification column uses the same full check as the coordinate path but
/// at tolerance gd_cert_tol (first-order error at the gradient stop is
/// looser than an exact solve).
PathResult gd_fit_path(const Dataset& data, double delta,
                       const LambdaGrid& grid, const GdConfig& gd,
                       double gd_cert_tol = 1e-5);

}  // namespace huberpath
