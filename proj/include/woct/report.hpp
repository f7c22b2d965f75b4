#pragma once

// JSON verification reports. Every result entry carries exactly the fields
// name, lhs, rhs, ratio, residual, tolerance, passed, config.

#include <string>
#include <vector>

#include "json.hpp"
#include "woct/inequalities.hpp"
#include "woct/verify.hpp"

namespace woct {

inline constexpr const char* kVersion = "0.1.0";

struct ReportEntry {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  nlohmann::json config = nlohmann::json::object();
};

/// lhs / rhs are the L2 norms of the two sides.
ReportEntry to_entry(const PropertyResidual& r);
/// residual is the relative violation (0 when satisfied), tolerance the slack.
ReportEntry to_entry(const InequalityReport& r);

nlohmann::json entry_to_json(const ReportEntry& e);

/// {"tool", "version", "command", "seed", "config", "results", "passed"}
nlohmann::json make_report(const std::string& command, std::uint64_t seed,
                           const nlohmann::json& config, const std::vector<ReportEntry>& entries);

bool all_passed(const std::vector<ReportEntry>& entries);

}  // namespace woct
