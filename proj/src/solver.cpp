#include "huberpath/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "huberpath/kernels.hpp"
#include "huberpath/loss.hpp"

namespace huberpath {

namespace {

// c0 = -(1/n) sum_i col_i * huber_deriv(u_i): the gradient of the smooth
// loss in coordinate j evaluated with beta_j zeroed out. All consumers of
// this quantity (zero check, sign choice, certification, screening) share
// the blocked reduction shape, so their values agree bitwise.
double partial_gradient(std::span<const double> col,
                        std::span<const double> u, double delta, double inv_n,
                        std::vector<double>& psi) {
  psi.resize(u.size());
  kernels::serial::huber_psi(u, delta, psi);
  return -inv_n * kernels::serial::dot(col, psi);
}

void fill_partial(std::span<const double> col, std::span<const double> r,
                  double beta_j, std::vector<double>& u) {
  u.resize(r.size());
  if (beta_j == 0.0) {
    std::copy(r.begin(), r.end(), u.begin());
  } else {
    for (std::size_t i = 0; i < r.size(); ++i) u[i] = r[i] + col[i] * beta_j;
  }
}

void check_partial_finite(std::span<const double> u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u[i]))
      throw std::runtime_error(
          "coordinate update: non-finite partial residual at observation " +
          std::to_string(i + 1));
  }
}

}  // namespace

FitState make_null_state(const Dataset& data) {
  FitState state;
  state.beta.assign(data.n_vars(), 0.0);
  state.residuals = data.y;
  return state;
}

FitState make_state(const Dataset& data, std::vector<double> beta) {
  if (beta.size() != data.n_vars())
    throw std::invalid_argument("make_state: beta length does not match data");
  FitState state;
  state.beta = std::move(beta);
  state.residuals.resize(data.n_obs());
  kernels::residuals(data, state.beta, state.residuals);
  return state;
}

double kkt_gradient(std::size_t j, const FitState& state, const Dataset& data,
                    double delta) {
  const auto col = data.x.col(j);
  std::vector<double> u, psi;
  fill_partial(col, state.residuals, state.beta[j], u);
  check_partial_finite(u);
  return partial_gradient(col, u, delta, 1.0 / static_cast<double>(data.n_obs()),
                          psi);
}

bool kkt_zero_check(std::size_t j, const FitState& state, const Dataset& data,
                    const HuberConfig& config) {
  return std::fabs(kkt_gradient(j, state, data, config.delta)) <=
         config.lambda;
}

double kkt_violation_measure(double beta_j, double c_j, double lambda) {
  if (beta_j == 0.0) return std::max(0.0, std::fabs(c_j) - lambda);
  return std::fabs(c_j + (beta_j > 0.0 ? lambda : -lambda));
}

double coordinate_update(std::size_t j, const FitState& state,
                         const Dataset& data, const HuberConfig& config,
                         CdWorkspace& ws, bool check_first) {
  const auto col = data.x.col(j);
  const double inv_n = 1.0 / static_cast<double>(data.n_obs());
  const double lambda = config.lambda;

  fill_partial(col, state.residuals, state.beta[j], ws.partial);
  check_partial_finite(ws.partial);
  const double c0 =
      partial_gradient(col, ws.partial, config.delta, inv_n, ws.psi);

  if (check_first && std::fabs(c0) <= lambda) return 0.0;

  // Kink profile of the coordinate restriction: observation i contributes a
  // Huber term centered at u_i / x_ij with curvature x_ij^2 / n and
  // half-width delta / |x_ij|. Entries tiny relative to the column scale
  // would put kinks astronomically far out for no numerical gain, so they
  // are dropped here (their residual bookkeeping is still exact).
  const double col_scale = kernels::max_abs(col);
  const double drop_below = 1e-12 * col_scale;
  ws.kink_scratch.clear();
  double base = 0.0;
  for (std::size_t i = 0; i < col.size(); ++i) {
    const double a = col[i];
    if (std::fabs(a) <= drop_below) continue;
    const double center = ws.partial[i] / a;
    const double slope = a * a * inv_n;
    const double width = config.delta / std::fabs(a);
    ws.kink_scratch.emplace_back(center - width, slope);
    ws.kink_scratch.emplace_back(center + width, -slope);
    base -= slope * width;
  }
  if (ws.kink_scratch.empty()) return 0.0;
  ws.profile.assign_from_pairs(ws.kink_scratch, base);

  if (!check_first && std::fabs(c0) <= lambda) return 0.0;

  // c0 < -lambda puts the minimizer right of zero (shift +lambda),
  // c0 > lambda left of it. If dropping tiny entries left no slack for a
  // crossing the active-set problem is minimized at zero.
  const double shift = c0 < 0.0 ? lambda : -lambda;
  if (ws.profile.base_deriv + shift >= 0.0) return 0.0;
  return ws.profile.solve_crossing(shift);
}

std::pair<FitState, SolveReport> solve_fixed_lambda(
    const Dataset& data, const HuberConfig& config, FitState initial,
    const std::optional<std::vector<int>>& eligible,
    const SolveOptions& opts) {
  validate_config(config);
  if (initial.beta.size() != data.n_vars() ||
      initial.residuals.size() != data.n_obs())
    throw std::invalid_argument("solve: state does not match data shape");
  if (opts.max_sweeps < 1)
    throw std::invalid_argument("solve: max_sweeps must be >= 1");

  std::vector<int> indices;
  if (eligible) {
    indices = *eligible;
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int j : indices) {
      if (j < 0 || static_cast<std::size_t>(j) >= data.n_vars())
        throw std::invalid_argument("solve: eligible index out of range");
    }
  } else {
    indices.resize(data.n_vars());
    for (std::size_t j = 0; j < data.n_vars(); ++j)
      indices[j] = static_cast<int>(j);
  }

  FitState state = std::move(initial);
  SolveReport rep;
  CdWorkspace ws;
  const double inv_n = 1.0 / static_cast<double>(data.n_obs());
  bool delta_converged = false;
  bool certified = false;
  // The coefficient-change test alone can stop while flat coordinates are
  // still crawling toward stationarity. When certification fails with
  // budget to spare, sweeping resumes at a tighter tolerance, so the
  // certificate is the effective convergence criterion.
  double work_tol = opts.tol;

  for (;;) {
    double last_max_delta = -1.0;
    delta_converged = false;
    while (rep.sweeps < opts.max_sweeps) {
      double max_delta = 0.0;
      for (int j : indices) {
        const std::size_t col_j = static_cast<std::size_t>(j);
        const double beta_old = state.beta[col_j];
        const double beta_new =
            coordinate_update(col_j, state, data, config, ws, opts.kkt_skip);
        if (beta_new != beta_old) {
          kernels::serial::axpy(beta_old - beta_new, data.x.col(col_j),
                                state.residuals);
          state.beta[col_j] = beta_new;
          ++rep.updates;
        } else if (beta_old == 0.0) {
          ++rep.skips;
        }
        max_delta = std::max(max_delta, std::fabs(beta_new - beta_old));
      }
      ++rep.sweeps;
      rep.final_max_delta = max_delta;
      if (opts.record_objective)
        rep.objective_trace.push_back(
            objective_from_residuals(state.residuals, state.beta, config));
      if (opts.refresh_every > 0 && rep.sweeps % opts.refresh_every == 0)
        kernels::residuals(data, state.beta, state.residuals);
      last_max_delta = max_delta;
      if (max_delta <= work_tol * (1.0 + kernels::max_abs(state.beta))) {
        delta_converged = true;
        break;
      }
    }

    // Refresh, then certify first-order optimality over the set we swept.
    kernels::residuals(data, state.beta, state.residuals);
    ws.psi.resize(data.n_obs());
    kernels::serial::huber_psi(state.residuals, config.delta, ws.psi);
    double worst = 0.0;
    for (int j : indices) {
      const std::size_t col_j = static_cast<std::size_t>(j);
      const double c_j =
          -inv_n * kernels::serial::dot(data.x.col(col_j), ws.psi);
      worst = std::max(
          worst, kkt_violation_measure(state.beta[col_j], c_j, config.lambda));
    }
    rep.kkt_max_violation = worst;
    certified = worst <= opts.kkt_tol;
    // Stop on success, an exhausted budget, or an exact fixed point (a full
    // sweep that moved nothing cannot be improved by more sweeping).
    if (certified || rep.sweeps >= opts.max_sweeps || last_max_delta == 0.0)
      break;
    work_tol *= 0.01;
  }

  rep.converged = delta_converged && certified;
  state.objective_value =
      objective_from_residuals(state.residuals, state.beta, config);
  return {std::move(state), rep};
}

}  // namespace huberpath
