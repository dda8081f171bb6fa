#pragma once

#include <vector>

#include "huberpath/dataset.hpp"
#include "huberpath/screening.hpp"
#include "huberpath/solver.hpp"

namespace huberpath {

/// Smallest penalty at which the all-zero model is stationary:
/// (1/n) * max_j |sum_i x_ij * huber_deriv(y_i)|.
double lambda_max(const Dataset& data, double delta);

struct LambdaGrid {
  std::vector<double> values;  ///< strictly decreasing, positive
  std::size_t size() const { return values.size(); }
};

/// Geometric grid from lambda_max down to min_ratio * lambda_max with
/// n_lambda points. Errors if lambda_max <= 0 (constant-zero response),
/// n_lambda < 1 or min_ratio outside (0, 1].
LambdaGrid make_grid(double lambda_max_value, int n_lambda, double min_ratio);

struct PathOptions {
  ScreenRule screen = ScreenRule::asr;
  bool kkt_skip = true;
  double tol = 1e-7;
  int max_sweeps = 10000;
  double kkt_tol = 1e-6;
  int max_repair_rounds = 100;  ///< violation-repair cap per lambda
};

struct PathResult {
  LambdaGrid lambdas;
  Matrix coefficients;               ///< p x L, column l = solution at lambda_l
  std::vector<int> nonzero_counts;   ///< per lambda
  std::vector<SolveReport> reports;  ///< per lambda (last repair round)
  std::vector<double> seconds;       ///< wall time per lambda, solve + repair
  std::vector<int> eligible_counts;  ///< screened set size (p when screen=none)
  std::vector<int> violation_counts; ///< screening violations repaired
  std::vector<char> kkt_certified;   ///< full stationarity check over all p
  std::vector<char> flagged;         ///< solver failed to converge here

  bool any_flagged() const;
};

/// Pathwise solve over a decreasing grid with warm starts, sequential
/// screening and violation repair: after each screened solve the zero
/// conditions are re-checked over all coordinates, violators join the
/// eligible set and the solve resumes, until the check is clean (errors if
/// repair rounds exceed the cap). Screening never changes the solution,
/// only the work. A lambda whose solve does not converge is flagged and the
/// path continues from its best iterate.
PathResult fit_path(const Dataset& data, double delta, const LambdaGrid& grid,
                    const PathOptions& opts);

}  // namespace huberpath
