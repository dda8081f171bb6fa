// huberpath: pathwise exact coordinate descent for l1-penalized Huber
// regression. Subcommands: fit, path, cv, simulate, bench, median.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "huberpath/bench.hpp"
#include "huberpath/csv.hpp"
#include "huberpath/cv.hpp"
#include "huberpath/gd.hpp"
#include "huberpath/json_io.hpp"
#include "huberpath/kernels.hpp"
#include "huberpath/loss.hpp"
#include "huberpath/median.hpp"
#include "huberpath/path.hpp"
#include "huberpath/simdata.hpp"

namespace {

using huberpath::BenchOptions;
using huberpath::BetaPattern;
using huberpath::CvCriterion;
using huberpath::DataError;
using huberpath::Dataset;
using huberpath::LambdaGrid;
using huberpath::Matrix;
using huberpath::PathOptions;
using huberpath::Scenario;
using huberpath::ScenarioSpec;
using huberpath::ScreenRule;
using huberpath::SolverKind;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNoConverge = 4;

struct IoFlags {
  std::string data_path;
  std::string response_path;
  std::string response_col;
  std::string weights_path;
  bool no_header = false;
};

struct SolveFlags {
  double delta = 0.5;
  double tol = 1e-7;
  int max_sweeps = 10000;
  std::string screen = "asr";
  std::string kkt_check = "on";
};

struct GridFlags {
  int n_lambda = 100;
  double min_ratio = 0.05;
  std::string grid_path;
};

ScreenRule parse_screen(const std::string& s) {
  if (s == "none") return ScreenRule::none;
  if (s == "ssr") return ScreenRule::ssr;
  if (s == "asr") return ScreenRule::asr;
  throw std::invalid_argument("--screen must be none, ssr or asr");
}

bool parse_on_off(const std::string& s, const char* flag) {
  if (s == "on") return true;
  if (s == "off") return false;
  throw std::invalid_argument(std::string(flag) + " must be on or off");
}

CvCriterion parse_criterion(const std::string& s) {
  if (s == "deviance") return CvCriterion::deviance;
  if (s == "mae") return CvCriterion::mae;
  if (s == "rmse") return CvCriterion::rmse;
  throw std::invalid_argument("--criterion must be deviance, mae or rmse");
}

BetaPattern parse_pattern(const std::string& s) {
  if (s == "fixed16") return BetaPattern::fixed16;
  if (s == "random10") return BetaPattern::random_ten_percent;
  if (s == "alternating") return BetaPattern::alternating_decay;
  throw std::invalid_argument(
      "--beta-pattern must be fixed16, random10 or alternating");
}

std::string pattern_name(BetaPattern p) {
  switch (p) {
    case BetaPattern::fixed16: return "fixed16";
    case BetaPattern::random_ten_percent: return "random10";
    case BetaPattern::alternating_decay: return "alternating";
  }
  return "fixed16";
}

void add_io_flags(CLI::App* cmd, IoFlags& io) {
  cmd->add_option("--data", io.data_path, "design matrix CSV")->required();
  cmd->add_option("--response", io.response_path,
                  "response CSV (single column)");
  cmd->add_option("--response-col", io.response_col,
                  "take the response from this named column of --data");
  cmd->add_option("--weights", io.weights_path,
                  "observation weights CSV (single column, positive)");
  cmd->add_flag("--no-header", io.no_header,
                "input files have no header row");
}

void add_solve_flags(CLI::App* cmd, SolveFlags& sf) {
  cmd->add_option("--delta", sf.delta, "Huber threshold")
      ->capture_default_str();
  cmd->add_option("--tol", sf.tol, "convergence tolerance")
      ->capture_default_str();
  cmd->add_option("--max-sweeps", sf.max_sweeps, "sweep limit per lambda")
      ->capture_default_str();
  cmd->add_option("--screen", sf.screen, "screening rule: none|ssr|asr")
      ->capture_default_str();
  cmd->add_option("--kkt-check", sf.kkt_check,
                  "zero-check before sorting kinks: on|off")
      ->capture_default_str();
}

// Reads a single-column (or single-row) CSV as a numeric vector.
std::vector<double> read_vector_csv(const std::string& path, bool has_header) {
  const huberpath::CsvTable table = huberpath::read_csv(path, has_header);
  if (table.values.cols() != 1)
    throw DataError(path + ": expected a single column, got " +
                    std::to_string(table.values.cols()));
  const auto col = table.values.col(0);
  return {col.begin(), col.end()};
}

Dataset load_dataset(const IoFlags& io) {
  if (io.response_path.empty() == io.response_col.empty())
    throw std::invalid_argument(
        "exactly one of --response and --response-col is required");
  const bool header = !io.no_header;
  const huberpath::CsvTable table = huberpath::read_csv(io.data_path, header);

  Matrix x;
  std::vector<double> y;
  if (!io.response_col.empty()) {
    if (table.names.empty())
      throw std::invalid_argument(
          "--response-col needs a header row (remove --no-header)");
    std::size_t target = table.names.size();
    for (std::size_t c = 0; c < table.names.size(); ++c) {
      if (table.names[c] == io.response_col) {
        target = c;
        break;
      }
    }
    if (target == table.names.size())
      throw DataError(io.data_path + ": no column named '" + io.response_col +
                      "'");
    if (table.values.cols() < 2)
      throw DataError(io.data_path +
                      ": need at least one predictor besides the response");
    x = Matrix(table.values.rows(), table.values.cols() - 1);
    y.resize(table.values.rows());
    std::size_t out = 0;
    for (std::size_t c = 0; c < table.values.cols(); ++c) {
      if (c == target) {
        for (std::size_t i = 0; i < table.values.rows(); ++i)
          y[i] = table.values(i, c);
        continue;
      }
      for (std::size_t i = 0; i < table.values.rows(); ++i)
        x(i, out) = table.values(i, c);
      ++out;
    }
  } else {
    x = table.values;
    y = read_vector_csv(io.response_path, header);
    if (y.size() != x.rows())
      throw DataError(io.response_path + ": response length " +
                      std::to_string(y.size()) + " does not match " +
                      std::to_string(x.rows()) + " data rows");
  }

  std::vector<double> w;
  if (!io.weights_path.empty()) w = read_vector_csv(io.weights_path, header);
  return huberpath::make_dataset(std::move(x), std::move(y), std::move(w));
}

void write_text_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw DataError(path + ": cannot open for writing");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

LambdaGrid resolve_grid(const Dataset& data, double delta,
                        const GridFlags& gf) {
  if (!gf.grid_path.empty()) {
    std::ifstream in(gf.grid_path);
    if (!in) throw DataError(gf.grid_path + ": cannot open file");
    std::vector<double> values =
        huberpath::read_number_list(in, gf.grid_path);
    std::sort(values.begin(), values.end(), std::greater<double>());
    for (double v : values) {
      if (!(v >= 0.0) || !std::isfinite(v))
        throw DataError(gf.grid_path + ": lambdas must be finite and >= 0");
    }
    return LambdaGrid{std::move(values)};
  }
  const double lmax = huberpath::lambda_max(data, delta);
  return huberpath::make_grid(lmax, gf.n_lambda, gf.min_ratio);
}

int run_fit_like(const IoFlags& io, const SolveFlags& sf, const GridFlags* gf,
                 const double* single_lambda, const std::string& output,
                 int threads) {
  Dataset data = load_dataset(io);
  const bool weighted = data.has_weights();
  if (weighted) data = huberpath::apply_weights(data);

  PathOptions opts;
  opts.screen = parse_screen(sf.screen);
  opts.kkt_skip = parse_on_off(sf.kkt_check, "--kkt-check");
  opts.tol = sf.tol;
  opts.max_sweeps = sf.max_sweeps;

  LambdaGrid grid;
  if (single_lambda) {
    if (!(*single_lambda >= 0.0) || !std::isfinite(*single_lambda))
      throw std::invalid_argument("--lambda must be finite and >= 0");
    grid.values = {*single_lambda};
  } else {
    grid = resolve_grid(data, sf.delta, *gf);
  }

  const huberpath::PathResult result =
      huberpath::fit_path(data, sf.delta, grid, opts);

  nlohmann::json echo;
  echo["subcommand"] = single_lambda ? "fit" : "path";
  echo["data"] = io.data_path;
  if (!io.response_path.empty()) echo["response"] = io.response_path;
  if (!io.response_col.empty()) echo["response_col"] = io.response_col;
  if (!io.weights_path.empty()) echo["weights"] = io.weights_path;
  echo["no_header"] = io.no_header;
  echo["delta"] = sf.delta;
  echo["tol"] = sf.tol;
  echo["max_sweeps"] = sf.max_sweeps;
  echo["screen"] = sf.screen;
  echo["kkt_check"] = sf.kkt_check;
  echo["threads"] = threads;
  if (single_lambda) {
    echo["lambda"] = *single_lambda;
  } else {
    echo["nlambda"] = gf->n_lambda;
    echo["lambda_min_ratio"] = gf->min_ratio;
    if (!gf->grid_path.empty()) echo["lambda_grid"] = gf->grid_path;
  }

  write_text_output(output, huberpath::path_to_json(result, echo).dump(2));
  return result.any_flagged() ? kExitNoConverge : kExitOk;
}

ScenarioSpec build_scenario(int scenario, std::size_t n, std::size_t p,
                            const std::optional<double>& rho1,
                            const std::optional<double>& rho2,
                            const std::string& pattern, std::uint64_t seed,
                            bool no_noise) {
  if (scenario < 1 || scenario > 6)
    throw std::invalid_argument("--scenario must be 1..6");
  ScenarioSpec spec;
  spec.scenario = static_cast<Scenario>(scenario);
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  spec.noise = !no_noise;
  // Correlation defaults follow the scenario definitions: |i-j| decay at
  // 0.8 except the heavy-tailed first block of scenario 4 (0.2) and the
  // first block of scenario 6 (0.4).
  switch (spec.scenario) {
    case Scenario::block_ar_t1_normal:
      spec.rho1 = rho1.value_or(0.2);
      spec.rho2 = rho2.value_or(0.8);
      break;
    case Scenario::block_ar_normal_normal:
      spec.rho1 = rho1.value_or(0.4);
      spec.rho2 = rho2.value_or(0.8);
      break;
    default:
      spec.rho1 = rho1.value_or(0.8);
      spec.rho2 = rho2.value_or(spec.rho1);
      break;
  }
  if (pattern.empty()) {
    spec.beta_pattern = scenario <= 4 ? BetaPattern::fixed16
                                      : BetaPattern::random_ten_percent;
  } else {
    spec.beta_pattern = parse_pattern(pattern);
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "huberpath: exact coordinate descent for l1-penalized Huber "
      "regression"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads for cv/bench (0 = auto)")
      ->capture_default_str();

  // ---- fit ----
  IoFlags fit_io;
  SolveFlags fit_sf;
  double fit_lambda = 0.0;
  std::string fit_output;
  CLI::App* fit = app.add_subcommand("fit", "solve at a single lambda");
  add_io_flags(fit, fit_io);
  add_solve_flags(fit, fit_sf);
  fit->add_option("--lambda", fit_lambda, "penalty level")->required();
  fit->add_option("--output", fit_output, "write JSON here (default stdout)");

  // ---- path ----
  IoFlags path_io;
  SolveFlags path_sf;
  GridFlags path_gf;
  std::string path_output;
  CLI::App* path = app.add_subcommand("path", "solve a full lambda path");
  add_io_flags(path, path_io);
  add_solve_flags(path, path_sf);
  path->add_option("--nlambda", path_gf.n_lambda, "grid size")
      ->capture_default_str();
  path->add_option("--lambda-min-ratio", path_gf.min_ratio,
                   "smallest lambda as a fraction of lambda_max")
      ->capture_default_str();
  path->add_option("--lambda-grid", path_gf.grid_path,
                   "file with explicit lambdas (overrides --nlambda)");
  path->add_option("--output", path_output,
                   "write JSON here (default stdout)");

  // ---- cv ----
  IoFlags cv_io;
  SolveFlags cv_sf;
  GridFlags cv_gf;
  int cv_folds = 5;
  std::string cv_criterion = "deviance";
  std::uint64_t cv_seed = 42;
  std::string cv_output;
  CLI::App* cv = app.add_subcommand("cv", "cross-validate the lambda path");
  add_io_flags(cv, cv_io);
  add_solve_flags(cv, cv_sf);
  cv->add_option("--nlambda", cv_gf.n_lambda, "grid size")
      ->capture_default_str();
  cv->add_option("--lambda-min-ratio", cv_gf.min_ratio,
                 "smallest lambda as a fraction of lambda_max")
      ->capture_default_str();
  cv->add_option("--lambda-grid", cv_gf.grid_path,
                 "file with explicit lambdas (overrides --nlambda)");
  cv->add_option("--folds", cv_folds, "fold count")->capture_default_str();
  cv->add_option("--criterion", cv_criterion, "deviance|mae|rmse")
      ->capture_default_str();
  cv->add_option("--seed", cv_seed, "fold-shuffle seed")
      ->capture_default_str();
  cv->add_option("--output", cv_output, "write JSON here (default stdout)");

  // ---- simulate ----
  int sim_scenario = 0;
  std::size_t sim_n = 0, sim_p = 0;
  std::optional<double> sim_rho1, sim_rho2;
  std::string sim_pattern;
  std::uint64_t sim_seed = 42;
  bool sim_no_noise = false;
  std::string sim_dir = ".";
  CLI::App* sim = app.add_subcommand(
      "simulate", "write X.csv, y.csv, beta_true.csv for a scenario");
  sim->add_option("--scenario", sim_scenario, "scenario number 1..6")
      ->required();
  sim->add_option("--n", sim_n, "observations")->required();
  sim->add_option("--p", sim_p, "variables")->required();
  double sim_rho1_val = 0.0, sim_rho2_val = 0.0;
  CLI::Option* sim_rho_opt =
      sim->add_option("--rho,--rho1", sim_rho1_val,
                      "correlation (first block for block scenarios)");
  CLI::Option* sim_rho2_opt =
      sim->add_option("--rho2", sim_rho2_val, "second-block correlation");
  sim->add_option("--beta-pattern", sim_pattern,
                  "fixed16|random10|alternating (default by scenario)");
  sim->add_option("--seed", sim_seed, "stream seed")->capture_default_str();
  sim->add_flag("--no-noise", sim_no_noise, "omit the N(0,1) errors");
  sim->add_option("--out-dir", sim_dir, "output directory (created if absent)")
      ->capture_default_str();

  // ---- bench ----
  int bench_scenario = 0;
  std::size_t bench_n = 100, bench_p = 100;
  double bench_rho1_val = 0.0, bench_rho2_val = 0.0;
  std::string bench_pattern;
  std::uint64_t bench_seed = 42;
  std::string bench_solver = "cd";
  SolveFlags bench_sf;
  int bench_nlambda = 100;
  double bench_min_ratio = 0.05;
  int bench_reps = 20;
  std::string bench_output;
  CLI::App* bench = app.add_subcommand(
      "bench", "timed replicated path fits on a synthetic scenario");
  bench->add_option("--scenario", bench_scenario, "scenario number 1..6")
      ->required();
  bench->add_option("--n", bench_n, "observations")->capture_default_str();
  bench->add_option("--p", bench_p, "variables")->capture_default_str();
  CLI::Option* bench_rho_opt = bench->add_option(
      "--rho,--rho1", bench_rho1_val, "correlation (first block)");
  CLI::Option* bench_rho2_opt =
      bench->add_option("--rho2", bench_rho2_val, "second-block correlation");
  bench->add_option("--beta-pattern", bench_pattern,
                    "fixed16|random10|alternating (default by scenario)");
  bench->add_option("--seed", bench_seed, "master seed")
      ->capture_default_str();
  bench->add_option("--solver", bench_solver, "cd|gd")->capture_default_str();
  add_solve_flags(bench, bench_sf);
  bench->add_option("--nlambda", bench_nlambda, "grid size")
      ->capture_default_str();
  bench->add_option("--lambda-min-ratio", bench_min_ratio,
                    "smallest lambda as a fraction of lambda_max")
      ->capture_default_str();
  bench->add_option("--replications", bench_reps, "independent datasets")
      ->capture_default_str();
  bench->add_option("--output", bench_output,
                    "write CSV here (default stdout)");

  // ---- median ----
  std::string med_file;
  double med_delta = 0.5;
  double med_lambda = 0.0;
  bool med_normalize = false;
  std::string med_output;
  CLI::App* med = app.add_subcommand(
      "median", "penalized Huber location estimate of a number list");
  med->add_option("file", med_file,
                  "numbers, one per line (default: standard input)");
  med->add_option("--delta", med_delta, "Huber threshold")
      ->capture_default_str();
  med->add_option("--lambda", med_lambda, "penalty level")
      ->capture_default_str();
  med->add_flag("--normalize", med_normalize,
                "minimize (1/n)*loss + lambda|c| instead of loss + lambda|c|");
  med->add_option("--output", med_output, "write JSON here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  huberpath::kernels::set_max_threads(threads);
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (fit->parsed()) {
      return run_fit_like(fit_io, fit_sf, nullptr, &fit_lambda, fit_output,
                          threads);
    }
    if (path->parsed()) {
      return run_fit_like(path_io, path_sf, &path_gf, nullptr, path_output,
                          threads);
    }
    if (cv->parsed()) {
      Dataset data = load_dataset(cv_io);
      if (data.has_weights()) data = huberpath::apply_weights(data);
      PathOptions opts;
      opts.screen = parse_screen(cv_sf.screen);
      opts.kkt_skip = parse_on_off(cv_sf.kkt_check, "--kkt-check");
      opts.tol = cv_sf.tol;
      opts.max_sweeps = cv_sf.max_sweeps;
      const LambdaGrid grid = resolve_grid(data, cv_sf.delta, cv_gf);
      const huberpath::CvResult result = huberpath::cross_validate(
          data, cv_sf.delta, grid, opts, cv_folds,
          parse_criterion(cv_criterion), cv_seed);

      nlohmann::json echo;
      echo["subcommand"] = "cv";
      echo["data"] = cv_io.data_path;
      if (!cv_io.response_path.empty()) echo["response"] = cv_io.response_path;
      if (!cv_io.response_col.empty())
        echo["response_col"] = cv_io.response_col;
      if (!cv_io.weights_path.empty()) echo["weights"] = cv_io.weights_path;
      echo["no_header"] = cv_io.no_header;
      echo["delta"] = cv_sf.delta;
      echo["tol"] = cv_sf.tol;
      echo["max_sweeps"] = cv_sf.max_sweeps;
      echo["screen"] = cv_sf.screen;
      echo["kkt_check"] = cv_sf.kkt_check;
      echo["nlambda"] = cv_gf.n_lambda;
      echo["lambda_min_ratio"] = cv_gf.min_ratio;
      if (!cv_gf.grid_path.empty()) echo["lambda_grid"] = cv_gf.grid_path;
      echo["folds"] = cv_folds;
      echo["criterion"] = cv_criterion;
      echo["seed"] = cv_seed;
      echo["threads"] = threads;
      write_text_output(cv_output,
                        huberpath::cv_to_json(result, echo).dump(2));
      return result.any_flagged ? kExitNoConverge : kExitOk;
    }
    if (sim->parsed()) {
      const ScenarioSpec spec = build_scenario(
          sim_scenario, sim_n, sim_p,
          *sim_rho_opt ? std::optional<double>(sim_rho1_val) : std::nullopt,
          *sim_rho2_opt ? std::optional<double>(sim_rho2_val) : std::nullopt,
          sim_pattern, sim_seed, sim_no_noise);
      const huberpath::SimulatedData sim_data = huberpath::generate(spec);

      std::error_code dir_ec;
      std::filesystem::create_directories(sim_dir, dir_ec);
      if (dir_ec)
        throw DataError(sim_dir + ": cannot create directory: " +
                        dir_ec.message());

      std::vector<std::string> xnames(spec.p);
      for (std::size_t j = 0; j < spec.p; ++j)
        xnames[j] = "x" + std::to_string(j + 1);
      std::ofstream xf(sim_dir + "/X.csv");
      if (!xf) throw DataError(sim_dir + "/X.csv: cannot open for writing");
      huberpath::write_csv(xf, sim_data.data.x, xnames);

      Matrix ym(spec.n, 1);
      for (std::size_t i = 0; i < spec.n; ++i) ym(i, 0) = sim_data.data.y[i];
      const std::vector<std::string> yname{"y"};
      std::ofstream yf(sim_dir + "/y.csv");
      if (!yf) throw DataError(sim_dir + "/y.csv: cannot open for writing");
      huberpath::write_csv(yf, ym, yname);

      Matrix bm(spec.p, 1);
      for (std::size_t j = 0; j < spec.p; ++j)
        bm(j, 0) = sim_data.beta_true[j];
      const std::vector<std::string> bname{"beta"};
      std::ofstream bf(sim_dir + "/beta_true.csv");
      if (!bf)
        throw DataError(sim_dir + "/beta_true.csv: cannot open for writing");
      huberpath::write_csv(bf, bm, bname);
      return kExitOk;
    }
    if (bench->parsed()) {
      const ScenarioSpec spec = build_scenario(
          bench_scenario, bench_n, bench_p,
          *bench_rho_opt ? std::optional<double>(bench_rho1_val)
                         : std::nullopt,
          *bench_rho2_opt ? std::optional<double>(bench_rho2_val)
                          : std::nullopt,
          bench_pattern, bench_seed, false);
      BenchOptions opts;
      if (bench_solver == "cd") {
        opts.solver = SolverKind::cd;
      } else if (bench_solver == "gd") {
        opts.solver = SolverKind::gd;
      } else {
        throw std::invalid_argument("--solver must be cd or gd");
      }
      opts.screen = parse_screen(bench_sf.screen);
      opts.kkt_skip = parse_on_off(bench_sf.kkt_check, "--kkt-check");
      opts.n_lambda = bench_nlambda;
      opts.min_ratio = bench_min_ratio;
      opts.delta = bench_sf.delta;
      opts.tol = bench_sf.tol;
      opts.max_sweeps = bench_sf.max_sweeps;
      opts.replications = bench_reps;

      const std::vector<huberpath::BenchReport> reports =
          huberpath::run_bench(spec, opts);
      std::ostringstream csv;
      huberpath::write_bench_csv(csv, spec, opts, reports);
      write_text_output(bench_output, csv.str());
      bool any_failed = false;
      for (const auto& rep : reports)
        for (char c : rep.converged)
          if (!c) any_failed = true;
      return any_failed ? kExitNoConverge : kExitOk;
    }
    if (med->parsed()) {
      std::vector<double> samples;
      if (med_file.empty()) {
        samples = huberpath::read_number_list(std::cin, "stdin");
      } else {
        std::ifstream in(med_file);
        if (!in) throw DataError(med_file + ": cannot open file");
        samples = huberpath::read_number_list(in, med_file);
      }
      const double n = static_cast<double>(samples.size());
      const double effective_lambda =
          med_normalize ? med_lambda * n : med_lambda;
      const double c =
          huberpath::huberized_median(samples, med_delta, effective_lambda);
      double obj = 0.0;
      for (double x : samples) obj += huberpath::huber_value(x - c, med_delta);
      if (med_normalize) obj = obj / n + med_lambda * std::fabs(c);
      else obj += med_lambda * std::fabs(c);

      if (med_output.empty()) {
        std::cout << huberpath::format_double(c) << '\n';
      } else {
        nlohmann::json j;
        j["version"] = huberpath::kResultVersion;
        j["config_echo"] = {{"subcommand", "median"},
                            {"delta", med_delta},
                            {"lambda", med_lambda},
                            {"normalize", med_normalize},
                            {"n", samples.size()}};
        j["estimate"] = c;
        j["objective"] = obj;
        write_text_output(med_output, j.dump(2));
      }
      return kExitOk;
    }
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
