#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "huberpath/gd.hpp"
#include "huberpath/path.hpp"
#include "huberpath/simdata.hpp"

namespace huberpath {

enum class SolverKind { cd, gd };

struct BenchOptions {
  SolverKind solver = SolverKind::cd;
  ScreenRule screen = ScreenRule::asr;
  bool kkt_skip = true;
  int n_lambda = 100;
  double min_ratio = 0.05;
  double delta = 0.5;
  double tol = 1e-7;
  int max_sweeps = 10000;
  int replications = 20;
};

/// One replication's results: the fitted path plus per-lambda accuracy
/// against the simulation truth. Wall time covers the path fit only (data
/// generation and serialization excluded).
struct BenchReport {
  int replication = 0;
  std::uint64_t seed = 0;
  std::vector<double> lambdas;
  std::vector<double> seconds;     ///< per lambda
  double total_seconds = 0.0;
  std::vector<double> nrmse;       ///< ||beta_l - beta*|| / ||beta*||
  std::vector<int> nonzeros;
  std::vector<int> sweeps;         ///< iterations for the gradient solver
  std::vector<int> eligible;
  std::vector<int> violations;
  std::vector<char> converged;
};

/// Runs `replications` independent draws of the scenario (seeds derived
/// from spec.seed and the replication index) and fits each with the chosen
/// solver. Replications run in parallel; outputs are ordered by index and
/// independent of the thread count.
std::vector<BenchReport> run_bench(const ScenarioSpec& spec,
                                   const BenchOptions& opts);

/// Tidy CSV, one row per (replication, lambda), with the scenario and
/// solver configuration repeated on every row for self-contained plotting.
void write_bench_csv(std::ostream& out, const ScenarioSpec& spec,
                     const BenchOptions& opts,
                     const std::vector<BenchReport>& reports);

}  // namespace huberpath
