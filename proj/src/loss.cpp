#include "huberpath/loss.hpp"

#include <vector>

#include "huberpath/kernels.hpp"

namespace huberpath {

double objective(const Dataset& data, std::span<const double> beta,
                 const HuberConfig& config) {
  validate_config(config);
  if (beta.size() != data.n_vars())
    throw std::invalid_argument("objective: beta length does not match data");
  const std::size_t n = data.n_obs();
  std::vector<double> r(n);
  kernels::residuals(data, beta, r);
  double loss;
  if (data.has_weights()) {
    // Weighted losses share the blocked reduction through a materialized
    // per-observation loss vector; the weighted path is never hot.
    const auto& w = data.weights;
    std::vector<double> terms(n);
    for (std::size_t i = 0; i < n; ++i)
      terms[i] = w[i] * huber_value(r[i], config.delta);
    loss = kernels::sum(terms);
  } else {
    loss = kernels::huber_loss_sum(r, config.delta);
  }
  return loss / static_cast<double>(n) +
         config.lambda * kernels::abs_sum(beta);
}

double objective_from_residuals(std::span<const double> residuals,
                                std::span<const double> beta,
                                const HuberConfig& config) {
  return kernels::huber_loss_sum(residuals, config.delta) /
             static_cast<double>(residuals.size()) +
         config.lambda * kernels::abs_sum(beta);
}

}  // namespace huberpath
