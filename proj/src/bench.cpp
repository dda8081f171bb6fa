#include "huberpath/bench.hpp"

#include <chrono>
#include <exception>
#include <ostream>

#include "huberpath/csv.hpp"
#include "huberpath/json_io.hpp"
#include "huberpath/rng.hpp"

namespace huberpath {

namespace {

BenchReport run_one(const ScenarioSpec& base, const BenchOptions& opts,
                    int replication) {
  ScenarioSpec spec = base;
  spec.seed = rng::derive_seed(base.seed, static_cast<std::uint64_t>(replication));

  BenchReport rep;
  rep.replication = replication;
  rep.seed = spec.seed;

  const SimulatedData sim = generate(spec);
  const double lmax = lambda_max(sim.data, opts.delta);
  const LambdaGrid grid = make_grid(lmax, opts.n_lambda, opts.min_ratio);

  PathResult path;
  const auto t0 = std::chrono::steady_clock::now();
  if (opts.solver == SolverKind::cd) {
    PathOptions popts;
    popts.screen = opts.screen;
    popts.kkt_skip = opts.kkt_skip;
    popts.tol = opts.tol;
    popts.max_sweeps = opts.max_sweeps;
    path = fit_path(sim.data, opts.delta, grid, popts);
  } else {
    GdConfig gd;
    gd.step_inverse = 1.01 * power_iteration_lmax(sim.data);
    gd.tol = opts.tol;
    gd.max_iters = opts.max_sweeps;
    path = gd_fit_path(sim.data, opts.delta, grid, gd);
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.total_seconds = std::chrono::duration<double>(t1 - t0).count();

  const std::size_t L = grid.size();
  rep.lambdas = grid.values;
  rep.seconds = path.seconds;
  rep.nrmse.resize(L);
  rep.nonzeros = path.nonzero_counts;
  rep.sweeps.resize(L);
  rep.eligible = path.eligible_counts;
  rep.violations = path.violation_counts;
  rep.converged.resize(L);
  for (std::size_t l = 0; l < L; ++l) {
    rep.nrmse[l] = normalized_rmse(path.coefficients.col(l), sim.beta_true);
    rep.sweeps[l] = path.reports[l].sweeps;
    rep.converged[l] = path.flagged[l] ? 0 : 1;
  }
  return rep;
}

}  // namespace

std::vector<BenchReport> run_bench(const ScenarioSpec& spec,
                                   const BenchOptions& opts) {
  if (opts.replications < 1)
    throw std::invalid_argument("bench: replications must be >= 1");
  std::vector<BenchReport> reports(static_cast<std::size_t>(opts.replications));
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int r = 0; r < opts.replications; ++r) {
    try {
      reports[static_cast<std::size_t>(r)] = run_one(spec, opts, r);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

void write_bench_csv(std::ostream& out, const ScenarioSpec& spec,
                     const BenchOptions& opts,
                     const std::vector<BenchReport>& reports) {
  out << "solver,scenario,n,p,rho1,rho2,beta_pattern,screen,kkt_skip,"
         "replication,seed,lambda_index,lambda,seconds,total_seconds,nrmse,"
         "nonzeros,sweeps,eligible,violations,converged\n";
  const char* solver = opts.solver == SolverKind::cd ? "cd" : "gd";
  const char* pattern =
      spec.beta_pattern == BetaPattern::fixed16
          ? "fixed16"
          : (spec.beta_pattern == BetaPattern::random_ten_percent
                 ? "random10"
                 : "alternating");
  for (const BenchReport& rep : reports) {
    for (std::size_t l = 0; l < rep.lambdas.size(); ++l) {
      out << solver << ',' << static_cast<int>(spec.scenario) << ','
          << spec.n << ',' << spec.p << ',' << format_double(spec.rho1) << ','
          << format_double(spec.rho2) << ',' << pattern << ','
          << screen_name(opts.screen) << ',' << (opts.kkt_skip ? 1 : 0) << ','
          << rep.replication << ',' << rep.seed << ',' << l + 1 << ','
          << format_double(rep.lambdas[l]) << ','
          << format_double(rep.seconds[l]) << ','
          << format_double(rep.total_seconds) << ','
          << format_double(rep.nrmse[l]) << ',' << rep.nonzeros[l] << ','
          << rep.sweeps[l] << ',' << rep.eligible[l] << ','
          << rep.violations[l] << ','
          << static_cast<int>(rep.converged[l]) << '\n';
    }
  }
}

}  // namespace huberpath
