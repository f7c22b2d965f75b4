#include "woct/report.hpp"

#include <cmath>
#include <limits>

namespace woct {

namespace {

// JSON has no infinities or NaNs; they are written as null.
nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

ReportEntry to_entry(const PropertyResidual& r) {
  ReportEntry e;
  e.name = r.name;
  e.lhs = r.lhs_norm;
  e.rhs = r.rhs_norm;
  e.ratio = r.rhs_norm > 0.0 ? r.lhs_norm / r.rhs_norm
                             : (r.lhs_norm == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
  e.residual = r.residual;
  e.tolerance = r.tolerance;
  e.passed = r.passed;
  e.config = {{"kind", "property"}, {"informational", r.informational}};
  return e;
}

ReportEntry to_entry(const InequalityReport& r) {
  ReportEntry e;
  e.name = r.name;
  e.lhs = r.lhs;
  e.rhs = r.rhs;
  e.ratio = r.ratio;
  const double scale = std::abs(r.lhs) + std::abs(r.rhs);
  const double excess = r.relation == "<=" ? r.lhs - r.rhs : r.rhs - r.lhs;
  e.residual = scale > 0.0 ? std::max(0.0, excess) / scale : 0.0;
  e.tolerance = r.slack;
  e.passed = r.satisfied;
  e.config = {{"kind", "inequality"}, {"relation", r.relation}};
  for (const auto& [k, v] : r.extras) e.config[k] = number(v);
  return e;
}

nlohmann::json entry_to_json(const ReportEntry& e) {
  return {{"name", e.name},          {"lhs", number(e.lhs)},
          {"rhs", number(e.rhs)},    {"ratio", number(e.ratio)},
          {"residual", number(e.residual)}, {"tolerance", e.tolerance},
          {"passed", e.passed},      {"config", e.config}};
}

nlohmann::json make_report(const std::string& command, std::uint64_t seed,
                           const nlohmann::json& config, const std::vector<ReportEntry>& entries) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& e : entries) results.push_back(entry_to_json(e));
  return {{"tool", "woct"},    {"version", kVersion}, {"command", command}, {"seed", seed},
          {"config", config},  {"results", results},  {"passed", all_passed(entries)}};
}

bool all_passed(const std::vector<ReportEntry>& entries) {
  for (const auto& e : entries) {
    if (!e.passed) return false;
  }
  return true;
}

}  // namespace woct
