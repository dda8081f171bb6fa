#include "huberpath/dataset.hpp"

#include <cmath>

namespace huberpath {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DataError(what);
}

}  // namespace

Dataset make_dataset(Matrix x, std::vector<double> y,
                     std::vector<double> weights) {
  require(x.rows() >= 1, "dataset: need at least one observation");
  require(x.cols() >= 1, "dataset: need at least one variable");
  require(y.size() == x.rows(),
          "dataset: response length " + std::to_string(y.size()) +
              " does not match " + std::to_string(x.rows()) + " rows");
  require(weights.empty() || weights.size() == x.rows(),
          "dataset: weight length " + std::to_string(weights.size()) +
              " does not match " + std::to_string(x.rows()) + " rows");

  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (double v : x.col(j)) {
      require(std::isfinite(v), "dataset: non-finite design entry in column " +
                                    std::to_string(j + 1));
    }
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    require(std::isfinite(y[i]), "dataset: non-finite response at row " +
                                     std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    require(std::isfinite(weights[i]) && weights[i] > 0.0,
            "dataset: weight at row " + std::to_string(i + 1) +
                " must be finite and positive");
  }
  return Dataset{std::move(x), std::move(y), std::move(weights)};
}

Dataset apply_weights(const Dataset& data) {
  if (!data.has_weights()) return data;
  const std::size_t n = data.n_obs();
  const std::size_t p = data.n_vars();
  Matrix xw(n, p);
  std::vector<double> yw(n);
  for (std::size_t i = 0; i < n; ++i) yw[i] = data.weights[i] * data.y[i];
  for (std::size_t j = 0; j < p; ++j) {
    auto src = data.x.col(j);
    auto dst = xw.col(j);
    for (std::size_t i = 0; i < n; ++i) dst[i] = data.weights[i] * src[i];
  }
  return Dataset{std::move(xw), std::move(yw), {}};
}

void validate_config(const HuberConfig& config) {
  if (!(std::isfinite(config.delta) && config.delta > 0.0))
    throw std::invalid_argument("config: delta must be finite and > 0");
  if (!(std::isfinite(config.lambda) && config.lambda >= 0.0))
    throw std::invalid_argument("config: lambda must be finite and >= 0");
}

}  // namespace huberpath
