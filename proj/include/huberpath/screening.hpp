#pragma once

#include <span>
#include <vector>

#include "huberpath/dataset.hpp"
#include "huberpath/solver.hpp"

namespace huberpath {

enum class ScreenRule { none, ssr, asr };

/// c_j = -(1/n) sum_i x_ij * huber_deriv(r_i) for every column, evaluated
/// at the state's residuals. This is simultaneously the screening statistic,
/// the stationarity certificate and (negated sign convention aside) the
/// gradient of the smooth loss.
std::vector<double> correlation_vector(const Dataset& data,
                                       const FitState& state, double delta);

/// Sequential screening state carried along the lambda path.
struct ScreeningState {
  std::vector<double> c_prev;  ///< correlations at the previous solution
  double lambda_prev = 0.0;
  double slope = 1.0;          ///< bound M on |dc/dlambda|; 1 for the static rule
};

/// Indices (ascending) surviving the sequential rule: |c_prev_j| >=
/// lambda_cur + slope * (lambda_cur - lambda_prev). Requires lambda_cur <=
/// lambda_prev; a zero gap reduces to |c_prev_j| >= lambda_cur.
std::vector<int> eligible_set(const ScreeningState& state, double lambda_cur);

/// Adaptive slope for the next step: max_j |c_prev_j - c_cur_j| /
/// (lambda_prev - lambda_cur). Errors unless lambda_prev > lambda_cur.
double update_slope(std::span<const double> c_prev,
                    std::span<const double> c_cur, double lambda_prev,
                    double lambda_cur);

/// Coordinates outside the eligible set whose post-solve correlation
/// violates the zero condition: |c_j| > lambda + 1e-8 * (1 + lambda).
/// eligible must be sorted ascending. Violators come back sorted.
std::vector<int> find_violations(std::span<const int> eligible,
                                 std::span<const double> post_solve_c,
                                 double lambda);

}  // namespace huberpath
