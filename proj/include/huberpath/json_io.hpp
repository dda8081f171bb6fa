#pragma once

#include <string>

#include <json.hpp>

#include "huberpath/cv.hpp"
#include "huberpath/path.hpp"

namespace huberpath {

/// Schema version stamped into every JSON document.
inline constexpr const char* kResultVersion = "1";

/// Path (or single-lambda fit) result as JSON: version, echoed
/// configuration, lambdas, per-lambda coefficient vectors, nonzero counts,
/// diagnostics (sweeps, violations, timings) and certification flags.
nlohmann::json path_to_json(const PathResult& result,
                            const nlohmann::json& config_echo);

/// Cross-validation result as JSON, including per-fold errors and the
/// selected lambda_min / lambda_1se.
nlohmann::json cv_to_json(const CvResult& result,
                          const nlohmann::json& config_echo);

std::string criterion_name(CvCriterion criterion);
std::string screen_name(ScreenRule rule);

}  // namespace huberpath
