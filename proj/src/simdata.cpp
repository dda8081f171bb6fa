#include "huberpath/simdata.hpp"

#include <cmath>
#include <stdexcept>

#include "huberpath/kernels.hpp"
#include "huberpath/rng.hpp"

namespace huberpath {

namespace {

// Dense SPD covariance builders, row-major p x p.
std::vector<double> compound_cov(std::size_t p, double rho) {
  std::vector<double> a(p * p, rho);
  for (std::size_t i = 0; i < p; ++i) a[i * p + i] = 1.0;
  return a;
}

std::vector<double> ar_cov(std::size_t p, double rho) {
  std::vector<double> a(p * p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      a[i * p + j] = std::pow(rho, std::fabs(static_cast<double>(i) -
                                             static_cast<double>(j)));
    }
  }
  return a;
}

// One correlated block of columns: either multivariate normal (t_dof == 0)
// or multivariate t with t_dof degrees of freedom and the block's matrix as
// scale (row = L z / sqrt(chi2_dof / dof)).
struct Block {
  std::size_t size = 0;
  int t_dof = 0;
  std::vector<double> chol;  // row-major lower triangular factor
};

std::vector<Block> scenario_blocks(const ScenarioSpec& spec) {
  const std::size_t p = spec.p;
  const std::size_t half = p / 2;
  std::vector<Block> blocks;
  switch (spec.scenario) {
    case Scenario::compound_normal:
      blocks.push_back({p, 0, cholesky_lower(compound_cov(p, spec.rho1), p)});
      break;
    case Scenario::ar_t2:
      blocks.push_back({p, 2, cholesky_lower(ar_cov(p, spec.rho1), p)});
      break;
    case Scenario::contaminated_ar: {
      if (p < 2)
        throw std::invalid_argument(
            "scenario 3 needs at least two variables");
      blocks.push_back(
          {p - 1, 0, cholesky_lower(ar_cov(p - 1, spec.rho1), p - 1)});
      blocks.push_back({1, 1, {1.0}});  // standard Cauchy contamination
      break;
    }
    case Scenario::block_ar_t1_normal: {
      if (half == 0 || p - half == 0)
        throw std::invalid_argument("block scenarios need at least two "
                                    "variables");
      blocks.push_back({half, 1, cholesky_lower(ar_cov(half, spec.rho1), half)});
      blocks.push_back(
          {p - half, 0, cholesky_lower(ar_cov(p - half, spec.rho2), p - half)});
      break;
    }
    case Scenario::ar_t4:
      blocks.push_back({p, 4, cholesky_lower(ar_cov(p, spec.rho1), p)});
      break;
    case Scenario::block_ar_normal_normal: {
      if (half == 0 || p - half == 0)
        throw std::invalid_argument("block scenarios need at least two "
                                    "variables");
      blocks.push_back({half, 0, cholesky_lower(ar_cov(half, spec.rho1), half)});
      blocks.push_back(
          {p - half, 0, cholesky_lower(ar_cov(p - half, spec.rho2), p - half)});
      break;
    }
  }
  return blocks;
}

void validate_spec(const ScenarioSpec& spec) {
  if (spec.n < 1 || spec.p < 1)
    throw std::invalid_argument("scenario: n and p must be >= 1");
  auto check_rho = [](double rho) {
    if (!(rho >= 0.0 && rho < 1.0))
      throw std::invalid_argument("scenario: rho must lie in [0, 1)");
  };
  check_rho(spec.rho1);
  check_rho(spec.rho2);
  const bool block = spec.scenario == Scenario::block_ar_t1_normal ||
                     spec.scenario == Scenario::block_ar_normal_normal;
  if (block && spec.p % 2 != 0)
    throw std::invalid_argument("scenario: block designs need an even p");
}

}  // namespace

std::vector<double> make_beta(BetaPattern pattern, std::size_t p,
                              std::uint64_t seed) {
  if (p < 1) throw std::invalid_argument("make_beta: p must be >= 1");
  std::vector<double> beta(p, 0.0);
  switch (pattern) {
    case BetaPattern::fixed16: {
      if (p < 16)
        throw std::invalid_argument("make_beta: the fixed pattern needs p >= 16");
      const double head[16] = {2, 0, 1.5, 0, 0.8, 0, 1, 0,
                               1.75, 0, 0, 0.75, 0, 0, 0.3, 0};
      for (std::size_t j = 0; j < 16; ++j) beta[j] = head[j];
      break;
    }
    case BetaPattern::random_ten_percent: {
      const std::size_t m = p / 10;
      rng::Stream stream(seed);
      // Partial Fisher-Yates over the index list: the first m slots end up
      // a uniform sample without replacement.
      std::vector<std::size_t> idx(p);
      for (std::size_t j = 0; j < p; ++j) idx[j] = j;
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t pick =
            k + static_cast<std::size_t>(stream.uniform_below(p - k));
        std::swap(idx[k], idx[pick]);
        beta[idx[k]] = 1.0;
      }
      break;
    }
    case BetaPattern::alternating_decay: {
      for (std::size_t j = 1; j <= p; ++j) {
        const double mag = std::exp(-(static_cast<double>(j) - 1.0) / 10.0);
        beta[j - 1] = (j % 2 == 1) ? -mag : mag;
      }
      break;
    }
  }
  return beta;
}

std::vector<double> cholesky_lower(std::span<const double> a, std::size_t p) {
  if (a.size() != p * p)
    throw std::invalid_argument("cholesky: matrix size mismatch");
  std::vector<double> l(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a[i * p + j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i * p + k] * l[j * p + k];
      if (i == j) {
        if (!(s > 0.0))
          throw std::invalid_argument(
              "cholesky: matrix is not positive definite");
        l[i * p + i] = std::sqrt(s);
      } else {
        l[i * p + j] = s / l[j * p + j];
      }
    }
  }
  return l;
}

Matrix sample_design(const ScenarioSpec& spec) {
  validate_spec(spec);
  const std::vector<Block> blocks = scenario_blocks(spec);
  rng::Stream stream(rng::derive_seed(spec.seed, 2));

  Matrix x(spec.n, spec.p);
  std::vector<double> z;
  // Row by row; within a row, block by block; within a t block the
  // chi-square normals come first, then the block's z vector. This order is
  // part of the reproducibility contract.
  for (std::size_t i = 0; i < spec.n; ++i) {
    std::size_t col0 = 0;
    for (const Block& b : blocks) {
      double scale = 1.0;
      if (b.t_dof > 0)
        scale = std::sqrt(stream.chi_square(b.t_dof) /
                          static_cast<double>(b.t_dof));
      z.resize(b.size);
      for (std::size_t k = 0; k < b.size; ++k) z[k] = stream.normal();
      for (std::size_t row = 0; row < b.size; ++row) {
        double s = 0.0;
        for (std::size_t k = 0; k <= row; ++k)
          s += b.chol[row * b.size + k] * z[k];
        x(i, col0 + row) = b.t_dof > 0 ? s / scale : s;
      }
      col0 += b.size;
    }
  }
  return x;
}

SimulatedData generate(const ScenarioSpec& spec) {
  validate_spec(spec);
  std::vector<double> beta =
      make_beta(spec.beta_pattern, spec.p, rng::derive_seed(spec.seed, 1));
  Matrix x = sample_design(spec);

  std::vector<double> y(spec.n);
  kernels::matvec(x, beta, y);
  if (spec.noise) {
    rng::Stream noise(rng::derive_seed(spec.seed, 3));
    for (std::size_t i = 0; i < spec.n; ++i) y[i] += noise.normal();
  }
  SimulatedData out;
  out.data = make_dataset(std::move(x), std::move(y));
  out.beta_true = std::move(beta);
  return out;
}

double normalized_rmse(std::span<const double> beta_hat,
                       std::span<const double> beta_true) {
  if (beta_hat.size() != beta_true.size())
    throw std::invalid_argument("normalized_rmse: length mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < beta_hat.size(); ++j) {
    const double d = beta_hat[j] - beta_true[j];
    num += d * d;
    den += beta_true[j] * beta_true[j];
  }
  if (den == 0.0)
    throw std::invalid_argument("normalized_rmse: true coefficients are all "
                                "zero");
  return std::sqrt(num / den);
}

}  // namespace huberpath
