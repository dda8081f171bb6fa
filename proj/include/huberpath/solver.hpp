#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "huberpath/dataset.hpp"
#include "huberpath/median.hpp"

namespace huberpath {

/// Solver iterate: coefficients plus residuals kept in sync (residuals ==
/// y - X beta up to accumulated rounding; the solver refreshes them
/// periodically and before certification).
struct FitState {
  std::vector<double> beta;
  std::vector<double> residuals;
  double objective_value = 0.0;
};

/// beta = 0, residuals = y.
FitState make_null_state(const Dataset& data);

/// Arbitrary starting point; residuals are computed from scratch.
FitState make_state(const Dataset& data, std::vector<double> beta);

struct SolveOptions {
  double tol = 1e-7;          ///< sweep stop: max |delta beta| <= tol*(1+||beta||_inf)
  int max_sweeps = 10000;
  bool kkt_skip = true;       ///< O(n) zero-check before sorting kinks
  double kkt_tol = 1e-6;      ///< certification tolerance
  int refresh_every = 50;     ///< recompute residuals every this many sweeps
  bool record_objective = false;  ///< keep F(beta) after every sweep
};

struct SolveReport {
  int sweeps = 0;
  bool converged = false;
  double final_max_delta = 0.0;
  double kkt_max_violation = 0.0;
  long long updates = 0;  ///< coordinate updates that changed beta_j
  long long skips = 0;    ///< zero-checks that avoided a sort
  std::vector<double> objective_trace;  ///< per-sweep F, if recorded
};

/// Reusable scratch for coordinate updates (partial residuals, kink
/// buffers); one per solve, no allocation in the sweep loop.
struct CdWorkspace {
  std::vector<double> partial;
  std::vector<double> centers;
  std::vector<double> slopes;
  std::vector<double> widths;
  std::vector<std::pair<double, double>> kink_scratch;
  std::vector<double> psi;
  KinkProfile profile;
};

/// Gradient of the smooth part in coordinate j with beta_j removed:
/// c_j = -(1/n) sum_i x_ij * huber_deriv(r_i + x_ij beta_j). At the zero
/// subproblem this is the quantity compared against lambda.
double kkt_gradient(std::size_t j, const FitState& state, const Dataset& data,
                    double delta);

/// True iff |kkt_gradient| <= lambda, i.e. beta_j = 0 solves coordinate j.
bool kkt_zero_check(std::size_t j, const FitState& state, const Dataset& data,
                    const HuberConfig& config);

/// Exact minimizer of the one-dimensional restriction of the objective to
/// coordinate j (all other coordinates and the residuals held fixed).
/// Observations with |x_ij| <= 1e-12 * max_i |x_ij| are dropped from the
/// kink profile; an all-(near-)zero column yields 0. When check_first is
/// set the zero test runs before any sorting and a zero solution returns
/// immediately; otherwise the kinks are sorted unconditionally. Both orders
/// return identical values.
double coordinate_update(std::size_t j, const FitState& state,
                         const Dataset& data, const HuberConfig& config,
                         CdWorkspace& ws, bool check_first = true);

/// Cyclic exact coordinate descent at fixed lambda, sweeping the eligible
/// set (all coordinates when std::nullopt) in ascending index order until
/// the max coefficient change passes the tolerance or sweeps run out.
/// On exit residuals are refreshed and the first-order conditions are
/// certified over the eligible set; if certification fails with sweep
/// budget remaining, sweeping resumes at a tighter tolerance until the
/// certificate holds, the budget runs out, or a full sweep moves nothing.
/// converged reflects both tests. Never throws on non-convergence -- the
/// report carries the outcome.
std::pair<FitState, SolveReport> solve_fixed_lambda(
    const Dataset& data, const HuberConfig& config, FitState initial,
    const std::optional<std::vector<int>>& eligible, const SolveOptions& opts);

/// Violation measure of the stationarity condition for one coordinate given
/// c_j computed at the solution: excess over lambda when beta_j == 0,
/// absolute residual of c_j + lambda*sign(beta_j) otherwise.
double kkt_violation_measure(double beta_j, double c_j, double lambda);

}  // namespace huberpath
