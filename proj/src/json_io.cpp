#include "huberpath/json_io.hpp"

namespace huberpath {

std::string criterion_name(CvCriterion criterion) {
  switch (criterion) {
    case CvCriterion::deviance: return "deviance";
    case CvCriterion::mae: return "mae";
    case CvCriterion::rmse: return "rmse";
  }
  return "deviance";
}

std::string screen_name(ScreenRule rule) {
  switch (rule) {
    case ScreenRule::none: return "none";
    case ScreenRule::ssr: return "ssr";
    case ScreenRule::asr: return "asr";
  }
  return "none";
}

nlohmann::json path_to_json(const PathResult& result,
                            const nlohmann::json& config_echo) {
  nlohmann::json j;
  j["version"] = kResultVersion;
  j["config_echo"] = config_echo;
  j["lambdas"] = result.lambdas.values;

  nlohmann::json coefs = nlohmann::json::array();
  for (std::size_t l = 0; l < result.lambdas.size(); ++l) {
    const auto col = result.coefficients.col(l);
    coefs.push_back(std::vector<double>(col.begin(), col.end()));
  }
  j["coefficients"] = std::move(coefs);
  j["nonzero_counts"] = result.nonzero_counts;

  std::vector<int> sweeps(result.reports.size());
  for (std::size_t l = 0; l < result.reports.size(); ++l)
    sweeps[l] = result.reports[l].sweeps;
  j["diagnostics"]["sweeps"] = sweeps;
  j["diagnostics"]["violations"] = result.violation_counts;
  j["diagnostics"]["eligible"] = result.eligible_counts;
  j["diagnostics"]["timings"] = result.seconds;

  std::vector<bool> certified(result.kkt_certified.size());
  for (std::size_t l = 0; l < result.kkt_certified.size(); ++l)
    certified[l] = result.kkt_certified[l] != 0;
  j["kkt_certified"] = certified;

  std::vector<bool> converged(result.flagged.size());
  for (std::size_t l = 0; l < result.flagged.size(); ++l)
    converged[l] = result.flagged[l] == 0;
  j["converged"] = converged;
  return j;
}

nlohmann::json cv_to_json(const CvResult& result,
                          const nlohmann::json& config_echo) {
  nlohmann::json j;
  j["version"] = kResultVersion;
  j["config_echo"] = config_echo;
  j["lambdas"] = result.lambdas.values;
  j["mean_error"] = result.mean_error;
  j["se_error"] = result.se_error;

  nlohmann::json folds = nlohmann::json::array();
  for (std::size_t f = 0; f < result.fold_errors.rows(); ++f) {
    std::vector<double> row(result.fold_errors.cols());
    for (std::size_t l = 0; l < result.fold_errors.cols(); ++l)
      row[l] = result.fold_errors(f, l);
    folds.push_back(std::move(row));
  }
  j["per_fold_error"] = std::move(folds);
  j["lambda_min"] = result.lambda_min;
  j["lambda_1se"] = result.lambda_1se;
  j["criterion"] = criterion_name(result.criterion);
  return j;
}

}  // namespace huberpath
