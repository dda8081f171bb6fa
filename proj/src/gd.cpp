#include "huberpath/gd.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "huberpath/kernels.hpp"
#include "huberpath/loss.hpp"
#include "huberpath/rng.hpp"
#include "huberpath/solver.hpp"

namespace huberpath {

std::vector<double> gd_gradient(const Dataset& data,
                                std::span<const double> beta, double delta) {
  if (beta.size() != data.n_vars())
    throw std::invalid_argument("gd_gradient: beta length does not match");
  const std::size_t n = data.n_obs();
  std::vector<double> r(n), psi(n), g(data.n_vars());
  kernels::residuals(data, beta, r);
  kernels::huber_psi(r, delta, psi);
  kernels::matvec_transpose(data.x, psi, g);
  const double neg_inv_n = -1.0 / static_cast<double>(n);
  for (double& v : g) v *= neg_inv_n;
  return g;
}

double power_iteration_lmax(const Dataset& data, int max_iters,
                            std::uint64_t seed) {
  const std::size_t n = data.n_obs();
  const std::size_t p = data.n_vars();
  if (max_iters < 1)
    throw std::invalid_argument("power_iteration: max_iters must be >= 1");

  rng::Stream stream(seed);
  std::vector<double> v(p), u(n), w(p);
  const double inv_n = 1.0 / static_cast<double>(n);

  auto randomize = [&] {
    double norm2 = 0.0;
    for (double& x : v) {
      x = stream.normal();
      norm2 += x * x;
    }
    const double norm = std::sqrt(norm2);
    for (double& x : v) x /= norm;
  };
  randomize();

  double rq_prev = -1.0;
  for (int it = 0; it < max_iters; ++it) {
    kernels::matvec(data.x, v, u);
    // Rayleigh quotient of X'X/n at unit v equals ||X v||^2 / n.
    const double rq = kernels::dot(u, u) * inv_n;
    if (rq == 0.0) {
      // v happened to land in the null space; try a fresh direction, or
      // conclude the design is identically zero.
      bool all_zero = true;
      for (std::size_t j = 0; j < p && all_zero; ++j)
        for (double x : data.x.col(j))
          if (x != 0.0) {
            all_zero = false;
            break;
          }
      if (all_zero)
        throw std::invalid_argument("power_iteration: design is all zeros");
      randomize();
      rq_prev = -1.0;
      continue;
    }
    if (rq_prev >= 0.0 && std::fabs(rq - rq_prev) < 1e-10 * (1.0 + rq))
      return rq;
    rq_prev = rq;
    kernels::matvec_transpose(data.x, u, w);
    double norm2 = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      w[j] *= inv_n;
      norm2 += w[j] * w[j];
    }
    const double norm = std::sqrt(norm2);
    for (std::size_t j = 0; j < p; ++j) v[j] = w[j] / norm;
  }
  return rq_prev;
}

std::pair<std::vector<double>, GdReport> gd_solve(const Dataset& data,
                                                  const HuberConfig& config,
                                                  const GdConfig& gd,
                                                  std::vector<double> beta0) {
  validate_config(config);
  if (!(gd.step_inverse > 0.0) || !std::isfinite(gd.step_inverse))
    throw std::invalid_argument("gd_solve: step_inverse must be positive");
  if (beta0.size() != data.n_vars())
    throw std::invalid_argument("gd_solve: beta0 length does not match");

  const std::size_t n = data.n_obs();
  const std::size_t p = data.n_vars();
  const double inv_l = 1.0 / gd.step_inverse;
  const double thresh = config.lambda * inv_l;
  const double neg_inv_n = -1.0 / static_cast<double>(n);

  std::vector<double> beta = std::move(beta0);
  std::vector<double> r(n), psi(n), g(p);
  kernels::residuals(data, beta, r);

  GdReport rep;
  for (int it = 0; it < gd.max_iters; ++it) {
    kernels::huber_psi(r, config.delta, psi);
    kernels::matvec_transpose(data.x, psi, g);
    double max_delta = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      const double grad_j = neg_inv_n * g[j];
      const double next = soft_threshold(beta[j] - grad_j * inv_l, thresh);
      const double change = next - beta[j];
      if (change != 0.0) {
        kernels::axpy(-change, data.x.col(j), r);
        beta[j] = next;
      }
      max_delta = std::max(max_delta, std::fabs(change));
    }
    ++rep.iterations;
    rep.final_max_delta = max_delta;
    rep.objective_trace.push_back(
        objective_from_residuals(r, beta, config));
    if (rep.iterations % 50 == 0) kernels::residuals(data, beta, r);
    if (max_delta <= gd.tol * (1.0 + kernels::max_abs(beta))) {
      rep.converged = true;
      break;
    }
  }
  return {std::move(beta), rep};
}

PathResult gd_fit_path(const Dataset& data, double delta,
                       const LambdaGrid& grid, const GdConfig& gd,
                       double gd_cert_tol) {
  if (grid.size() == 0) throw std::invalid_argument("gd_fit_path: empty grid");
  const std::size_t p = data.n_vars();
  const std::size_t L = grid.size();

  PathResult result;
  result.lambdas = grid;
  result.coefficients = Matrix(p, L);
  result.nonzero_counts.resize(L);
  result.reports.resize(L);
  result.seconds.resize(L);
  result.eligible_counts.assign(L, static_cast<int>(p));
  result.violation_counts.assign(L, 0);
  result.kkt_certified.assign(L, 0);
  result.flagged.assign(L, 0);

  std::vector<double> beta(p, 0.0);
  for (std::size_t l = 0; l < L; ++l) {
    const HuberConfig config{delta, grid.values[l]};
    const auto t0 = std::chrono::steady_clock::now();
    auto [next, rep] = gd_solve(data, config, gd, std::move(beta));
    const auto t1 = std::chrono::steady_clock::now();
    beta = std::move(next);

    result.seconds[l] = std::chrono::duration<double>(t1 - t0).count();
    auto coef = result.coefficients.col(l);
    int nnz = 0;
    for (std::size_t j = 0; j < p; ++j) {
      coef[j] = beta[j];
      if (beta[j] != 0.0) ++nnz;
    }
    result.nonzero_counts[l] = nnz;
    result.flagged[l] = rep.converged ? 0 : 1;

    FitState state = make_state(data, beta);
    const std::vector<double> c = correlation_vector(data, state, delta);
    double worst = 0.0;
    for (std::size_t j = 0; j < p; ++j)
      worst = std::max(worst,
                       kkt_violation_measure(beta[j], c[j], config.lambda));
    result.kkt_certified[l] = worst <= gd_cert_tol ? 1 : 0;

    SolveReport solver_rep;
    solver_rep.sweeps = rep.iterations;
    solver_rep.converged = rep.converged;
    solver_rep.final_max_delta = rep.final_max_delta;
    solver_rep.kkt_max_violation = worst;
    result.reports[l] = std::move(solver_rep);
  }
  return result;
}

}  // namespace huberpath
