#include "huberpath/cv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "huberpath/kernels.hpp"
#include "huberpath/loss.hpp"
#include "huberpath/rng.hpp"

namespace huberpath {

double prediction_error(std::span<const double> beta, const Dataset& holdout,
                        double delta, CvCriterion criterion) {
  if (holdout.n_obs() == 0)
    throw std::invalid_argument("prediction_error: empty holdout");
  if (beta.size() != holdout.n_vars())
    throw std::invalid_argument("prediction_error: beta length mismatch");
  const std::size_t n = holdout.n_obs();
  std::vector<double> r(n);
  kernels::residuals(holdout, beta, r);
  const double inv_n = 1.0 / static_cast<double>(n);
  switch (criterion) {
    case CvCriterion::deviance:
      return kernels::huber_loss_sum(r, delta) * inv_n;
    case CvCriterion::mae:
      return kernels::abs_sum(r) * inv_n;
    case CvCriterion::rmse:
      return std::sqrt(kernels::dot(r, r) * inv_n);
  }
  throw std::logic_error("prediction_error: unknown criterion");
}

namespace {

Dataset subset_rows(const Dataset& data, std::span<const std::size_t> rows) {
  Matrix x(rows.size(), data.n_vars());
  std::vector<double> y(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    y[k] = data.y[rows[k]];
    for (std::size_t j = 0; j < data.n_vars(); ++j)
      x(k, j) = data.x(rows[k], j);
  }
  return Dataset{std::move(x), std::move(y), {}};
}

}  // namespace

std::vector<std::vector<std::size_t>> fold_assignment(std::size_t n,
                                                      int folds,
                                                      std::uint64_t seed) {
  if (folds < 2 || static_cast<std::size_t>(folds) > n)
    throw std::invalid_argument(
        "fold_assignment: folds must lie in [2, n]; every fold needs at "
        "least one observation");

  // Seeded shuffle dealt round-robin: fold of shuffled position k is k mod
  // folds. Deterministic in (n, folds, seed).
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng::Stream stream(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t k = static_cast<std::size_t>(stream.uniform_below(i));
    std::swap(order[i - 1], order[k]);
  }

  std::vector<std::vector<std::size_t>> test_rows(
      static_cast<std::size_t>(folds));
  for (std::size_t k = 0; k < n; ++k)
    test_rows[k % static_cast<std::size_t>(folds)].push_back(order[k]);
  for (auto& fold : test_rows) std::sort(fold.begin(), fold.end());
  return test_rows;
}

CvResult cross_validate(const Dataset& data, double delta,
                        const LambdaGrid& grid, const PathOptions& opts,
                        int folds, CvCriterion criterion, std::uint64_t seed) {
  const std::size_t n = data.n_obs();
  if (data.has_weights())
    throw std::invalid_argument(
        "cross_validate: fold weights are ambiguous; apply_weights first");

  const std::size_t L = grid.size();
  CvResult result;
  result.lambdas = grid;
  result.criterion = criterion;
  result.fold_errors = Matrix(static_cast<std::size_t>(folds), L);
  result.mean_error.assign(L, 0.0);
  result.se_error.assign(L, 0.0);

  const std::vector<std::vector<std::size_t>> test_rows =
      fold_assignment(n, folds, seed);
  std::vector<std::vector<std::size_t>> train_rows(
      static_cast<std::size_t>(folds));
  for (std::size_t f = 0; f < static_cast<std::size_t>(folds); ++f) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!std::binary_search(test_rows[f].begin(), test_rows[f].end(), k))
        train_rows[f].push_back(k);
    }
  }

  // Fold fits are independent; run them in parallel. Each fold writes only
  // its own row of fold_errors, so results are order-independent. Exceptions
  // are ferried out of the parallel region and rethrown.
  std::vector<char> fold_flagged(static_cast<std::size_t>(folds), 0);
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int f = 0; f < folds; ++f) {
    try {
      const std::size_t fs = static_cast<std::size_t>(f);
      const Dataset train = subset_rows(data, train_rows[fs]);
      const Dataset test = subset_rows(data, test_rows[fs]);
      const PathResult path = fit_path(train, delta, grid, opts);
      fold_flagged[fs] = path.any_flagged() ? 1 : 0;
      for (std::size_t l = 0; l < L; ++l) {
        result.fold_errors(fs, l) = prediction_error(
            path.coefficients.col(l), test, delta, criterion);
      }
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (char f : fold_flagged)
    if (f) result.any_flagged = true;

  const double nf = static_cast<double>(folds);
  for (std::size_t l = 0; l < L; ++l) {
    double mean = 0.0;
    for (int f = 0; f < folds; ++f)
      mean += result.fold_errors(static_cast<std::size_t>(f), l);
    mean /= nf;
    double var = 0.0;
    for (int f = 0; f < folds; ++f) {
      const double d =
          result.fold_errors(static_cast<std::size_t>(f), l) - mean;
      var += d * d;
    }
    var /= (nf - 1.0);
    result.mean_error[l] = mean;
    result.se_error[l] = std::sqrt(var / nf);
  }

  // lambda_min: smallest mean error, ties resolved toward the larger
  // penalty (grids are decreasing, so the first index wins).
  std::size_t best = 0;
  for (std::size_t l = 1; l < L; ++l) {
    if (result.mean_error[l] < result.mean_error[best]) best = l;
  }
  result.lambda_min = grid.values[best];

  // lambda_1se: largest lambda whose mean error is within one standard
  // error of the minimum.
  const double cutoff = result.mean_error[best] + result.se_error[best];
  std::size_t pick = best;
  for (std::size_t l = 0; l <= best; ++l) {
    if (result.mean_error[l] <= cutoff) {
      pick = l;
      break;
    }
  }
  result.lambda_1se = grid.values[pick];
  return result;
}

}  // namespace huberpath
