#include "huberpath/screening.hpp"

#include <cmath>
#include <stdexcept>

#include "huberpath/kernels.hpp"

namespace huberpath {

std::vector<double> correlation_vector(const Dataset& data,
                                       const FitState& state, double delta) {
  const std::size_t n = data.n_obs();
  const std::size_t p = data.n_vars();
  std::vector<double> psi(n), c(p);
  kernels::huber_psi(state.residuals, delta, psi);
  kernels::matvec_transpose(data.x, psi, c);
  const double neg_inv_n = -1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < p; ++j) c[j] *= neg_inv_n;
  return c;
}

std::vector<int> eligible_set(const ScreeningState& state, double lambda_cur) {
  if (lambda_cur > state.lambda_prev)
    throw std::invalid_argument(
        "eligible_set: lambda must not exceed the previous one");
  const double threshold =
      lambda_cur + state.slope * (lambda_cur - state.lambda_prev);
  std::vector<int> eligible;
  for (std::size_t j = 0; j < state.c_prev.size(); ++j) {
    if (std::fabs(state.c_prev[j]) >= threshold)
      eligible.push_back(static_cast<int>(j));
  }
  return eligible;
}

double update_slope(std::span<const double> c_prev,
                    std::span<const double> c_cur, double lambda_prev,
                    double lambda_cur) {
  if (c_prev.size() != c_cur.size())
    throw std::invalid_argument("update_slope: length mismatch");
  if (!(lambda_prev > lambda_cur))
    throw std::invalid_argument(
        "update_slope: needs strictly decreasing lambdas");
  double worst = 0.0;
  for (std::size_t j = 0; j < c_prev.size(); ++j)
    worst = std::max(worst, std::fabs(c_prev[j] - c_cur[j]));
  return worst / (lambda_prev - lambda_cur);
}

std::vector<int> find_violations(std::span<const int> eligible,
                                 std::span<const double> post_solve_c,
                                 double lambda) {
  const double tol = 1e-8 * (1.0 + lambda);
  std::vector<int> violators;
  std::size_t next_eligible = 0;
  for (std::size_t j = 0; j < post_solve_c.size(); ++j) {
    while (next_eligible < eligible.size() &&
           eligible[next_eligible] < static_cast<int>(j))
      ++next_eligible;
    const bool in_set = next_eligible < eligible.size() &&
                        eligible[next_eligible] == static_cast<int>(j);
    if (in_set) continue;
    if (std::fabs(post_solve_c[j]) > lambda + tol)
      violators.push_back(static_cast<int>(j));
  }
  return violators;
}

}  // namespace huberpath
