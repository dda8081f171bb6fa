#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "huberpath/dataset.hpp"

namespace huberpath {

/// Synthetic design families used by the benchmark harness. Correlation
/// defaults, tail behaviour and the block layout follow the benchmark
/// definitions in the README.
enum class Scenario {
  compound_normal = 1,  ///< N(0, S), S = (1-rho) I + rho 11'
  ar_t2 = 2,            ///< multivariate t, 2 dof, AR(rho) scale
  contaminated_ar = 3,  ///< N(0, AR(rho)) for p-1 columns, last column t1
  block_ar_t1_normal = 4,  ///< first half t1 AR(rho1), second half N AR(rho2)
  ar_t4 = 5,            ///< multivariate t, 4 dof, AR(rho) scale
  block_ar_normal_normal = 6,  ///< two normal AR blocks, rho1 / rho2
};

enum class BetaPattern {
  fixed16,             ///< (2,0,1.5,0,0.8,0,1,0,1.75,0,0,0.75,0,0,0.3,0,...)
  random_ten_percent,  ///< floor(p/10) random entries set to 1
  alternating_decay,   ///< beta_j = (-1)^j exp(-(j-1)/10), 1-indexed
};

struct ScenarioSpec {
  Scenario scenario = Scenario::compound_normal;
  std::size_t n = 100;
  std::size_t p = 100;
  double rho1 = 0.8;  ///< correlation (first block where applicable)
  double rho2 = 0.8;  ///< second-block correlation for block scenarios
  BetaPattern beta_pattern = BetaPattern::fixed16;
  std::uint64_t seed = 42;
  bool noise = true;  ///< standard normal errors; off gives y = X beta
};

/// Coefficient vector for a pattern; fixed16 requires p >= 16. The random
/// pattern draws its support from `seed` alone.
std::vector<double> make_beta(BetaPattern pattern, std::size_t p,
                              std::uint64_t seed);

/// Lower-triangular Cholesky factor of a dense SPD matrix (row-major
/// p x p); throws std::invalid_argument if a pivot is not positive.
std::vector<double> cholesky_lower(std::span<const double> a, std::size_t p);

/// n i.i.d. rows from the scenario's design distribution. Multivariate
/// normal rows are L z; multivariate t_nu rows are L z / sqrt(chi2_nu / nu)
/// (scale-matrix convention). Per row the draw order is fixed: the
/// chi-square normals (t scenarios) first, then the row's z vector, block
/// by block.
Matrix sample_design(const ScenarioSpec& spec);

struct SimulatedData {
  Dataset data;
  std::vector<double> beta_true;
};

/// Design + coefficients + response y = X beta (+ standard normal errors
/// unless noise is off). Substreams: coefficients, design, errors draw from
/// independent children of spec.seed, so the coefficient draw does not
/// shift with n.
SimulatedData generate(const ScenarioSpec& spec);

/// ||beta_hat - beta_true||_2 / ||beta_true||_2; errors on a zero truth.
double normalized_rmse(std::span<const double> beta_hat,
                       std::span<const double> beta_true);

}  // namespace huberpath
