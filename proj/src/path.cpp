#include "huberpath/path.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "huberpath/kernels.hpp"

namespace huberpath {

double lambda_max(const Dataset& data, double delta) {
  const FitState null_state = make_null_state(data);
  const std::vector<double> c = correlation_vector(data, null_state, delta);
  return kernels::max_abs(c);
}

LambdaGrid make_grid(double lambda_max_value, int n_lambda, double min_ratio) {
  if (!(lambda_max_value > 0.0) || !std::isfinite(lambda_max_value))
    throw std::invalid_argument(
        "make_grid: lambda_max must be positive (is the response all zero?)");
  if (n_lambda < 1)
    throw std::invalid_argument("make_grid: need at least one grid point");
  if (!(min_ratio > 0.0 && min_ratio <= 1.0))
    throw std::invalid_argument("make_grid: min_ratio must be in (0, 1]");
  LambdaGrid grid;
  grid.values.resize(static_cast<std::size_t>(n_lambda));
  if (n_lambda == 1) {
    grid.values[0] = lambda_max_value;
    return grid;
  }
  // Geometric spacing: endpoints hit lambda_max and min_ratio * lambda_max
  // exactly.
  const double log_top = std::log(lambda_max_value);
  const double log_step = std::log(min_ratio) / (n_lambda - 1);
  for (int l = 0; l < n_lambda; ++l)
    grid.values[static_cast<std::size_t>(l)] = std::exp(log_top + l * log_step);
  grid.values.front() = lambda_max_value;
  grid.values.back() = min_ratio * lambda_max_value;
  return grid;
}

bool PathResult::any_flagged() const {
  return std::any_of(flagged.begin(), flagged.end(),
                     [](char f) { return f != 0; });
}

PathResult fit_path(const Dataset& data, double delta, const LambdaGrid& grid,
                    const PathOptions& opts) {
  if (grid.size() == 0) throw std::invalid_argument("fit_path: empty grid");
  for (std::size_t l = 0; l + 1 < grid.size(); ++l) {
    if (!(grid.values[l] >= grid.values[l + 1]))
      throw std::invalid_argument("fit_path: grid must be non-increasing");
  }
  const std::size_t p = data.n_vars();
  const std::size_t L = grid.size();

  PathResult result;
  result.lambdas = grid;
  result.coefficients = Matrix(p, L);
  result.nonzero_counts.resize(L);
  result.reports.resize(L);
  result.seconds.resize(L);
  result.eligible_counts.resize(L);
  result.violation_counts.resize(L);
  result.kkt_certified.assign(L, 0);
  result.flagged.assign(L, 0);

  SolveOptions solve_opts;
  solve_opts.tol = opts.tol;
  solve_opts.max_sweeps = opts.max_sweeps;
  solve_opts.kkt_skip = opts.kkt_skip;
  solve_opts.kkt_tol = opts.kkt_tol;

  FitState state = make_null_state(data);

  // The null model solves every penalty at or above lambda_max, so it seeds
  // the sequential rule: previous correlations are those of the zero fit and
  // the previous penalty level is lambda_max (or the grid head if larger).
  ScreeningState screen;
  screen.c_prev = correlation_vector(data, state, delta);
  const double lmax = kernels::max_abs(screen.c_prev);
  screen.lambda_prev = std::max(lmax, grid.values.front());
  screen.slope = 1.0;

  for (std::size_t l = 0; l < L; ++l) {
    const double lambda = grid.values[l];
    const HuberConfig config{delta, lambda};
    const auto t0 = std::chrono::steady_clock::now();

    std::optional<std::vector<int>> eligible;
    if (opts.screen != ScreenRule::none)
      eligible = eligible_set(screen, lambda);
    const int screened_size =
        eligible ? static_cast<int>(eligible->size()) : static_cast<int>(p);

    SolveReport rep;
    std::vector<double> c_cur;
    int repaired = 0;
    int rounds = 0;
    for (;;) {
      auto [next_state, next_rep] =
          solve_fixed_lambda(data, config, std::move(state), eligible,
                             solve_opts);
      state = std::move(next_state);
      rep = std::move(next_rep);
      c_cur = correlation_vector(data, state, delta);
      if (!eligible) break;  // swept everything; nothing was excluded
      std::vector<int> violators = find_violations(*eligible, c_cur, lambda);
      if (violators.empty()) break;
      if (++rounds > opts.max_repair_rounds)
        throw std::runtime_error(
            "fit_path: screening repair did not settle; this indicates a "
            "broken screening rule");
      repaired += static_cast<int>(violators.size());
      std::vector<int> merged;
      merged.reserve(eligible->size() + violators.size());
      std::merge(eligible->begin(), eligible->end(), violators.begin(),
                 violators.end(), std::back_inserter(merged));
      *eligible = std::move(merged);
    }

    const auto t1 = std::chrono::steady_clock::now();
    result.seconds[l] = std::chrono::duration<double>(t1 - t0).count();

    // Full stationarity certificate over all p coordinates from the
    // correlations just computed.
    double worst = 0.0;
    for (std::size_t j = 0; j < p; ++j)
      worst = std::max(worst, kkt_violation_measure(state.beta[j], c_cur[j],
                                                    lambda));
    result.kkt_certified[l] = worst <= opts.kkt_tol ? 1 : 0;

    auto coef = result.coefficients.col(l);
    int nnz = 0;
    for (std::size_t j = 0; j < p; ++j) {
      coef[j] = state.beta[j];
      if (state.beta[j] != 0.0) ++nnz;
    }
    result.nonzero_counts[l] = nnz;
    result.eligible_counts[l] = screened_size;
    result.violation_counts[l] = repaired;
    result.flagged[l] = rep.converged ? 0 : 1;
    result.reports[l] = std::move(rep);

    // Advance the adaptive rule using certified end-of-solve correlations.
    // The slope bound keeps the worst ratio seen on any segment so far: a
    // fresh per-segment estimate forgets spikes one step back and misses
    // coordinates that enter with high velocity, while the running bound
    // only ever tightens eligibility (violations stay rare and repairable).
    if (opts.screen == ScreenRule::asr && screen.lambda_prev > lambda)
      screen.slope = std::max(
          screen.slope, update_slope(screen.c_prev, c_cur, screen.lambda_prev,
                                     lambda));
    screen.c_prev = std::move(c_cur);
    screen.lambda_prev = lambda;
  }
  return result;
}

}  // namespace huberpath
