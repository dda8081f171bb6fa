#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "huberpath/dataset.hpp"
#include "huberpath/path.hpp"

namespace huberpath {

enum class CvCriterion { deviance, mae, rmse };

/// Held-out prediction error of a coefficient vector: mean Huber loss
/// (deviance), mean absolute error or root mean squared error of the
/// residuals. Errors on an empty holdout.
double prediction_error(std::span<const double> beta, const Dataset& holdout,
                        double delta, CvCriterion criterion);

struct CvResult {
  LambdaGrid lambdas;
  std::vector<double> mean_error;      ///< per lambda, averaged over folds
  std::vector<double> se_error;        ///< sd over folds / sqrt(folds)
  Matrix fold_errors;                  ///< folds x L
  double lambda_min = 0.0;             ///< smallest mean error (ties: larger lambda)
  double lambda_1se = 0.0;             ///< largest lambda within one SE of the min
  CvCriterion criterion = CvCriterion::deviance;
  bool any_flagged = false;            ///< some fold fit failed to converge
};

/// Test-row indices of each fold: a seeded shuffle of 0..n-1 dealt
/// round-robin (fold of shuffled position k is k mod folds), each fold
/// sorted ascending. Folds partition the indices and differ in size by at
/// most one. Requires 2 <= folds <= n.
std::vector<std::vector<std::size_t>> fold_assignment(std::size_t n,
                                                      int folds,
                                                      std::uint64_t seed);

/// k-fold cross-validation of the lambda path. Folds come from
/// fold_assignment, the grid comes from the full data and is shared by
/// all folds, and each fold fits a full warm-started path. Requires
/// 2 <= folds <= n. Fold fits run in parallel; results do not depend on
/// the thread count.
CvResult cross_validate(const Dataset& data, double delta,
                        const LambdaGrid& grid, const PathOptions& opts,
                        int folds, CvCriterion criterion, std::uint64_t seed);

}  // namespace huberpath
