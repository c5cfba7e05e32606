#include "gran/oracle/report.hpp"

#include <cstdio>
#include <sstream>

namespace gran::oracle {

namespace {

nlohmann::json pairs(const std::vector<std::pair<std::string, std::string>> &items) {
  auto out = nlohmann::json::object();
  for (const auto &[k, v] : items)
    out[k] = v;
  return out;
}

} // namespace

nlohmann::json to_json(const Certificate &c) {
  nlohmann::json j{{"operands", pairs(c.operands)}, {"values", pairs(c.values)}};
  if (!c.note.empty())
    j["note"] = c.note;
  return j;
}

nlohmann::json to_json(const CheckReport &r) {
  auto violations = nlohmann::json::array();
  for (const auto &c : r.violations)
    violations.push_back(to_json(c));
  return {{"id", r.claim_id},
          {"description", r.description},
          {"expectation", std::string(to_string(r.expectation))},
          {"status", std::string(to_string(r.status()))},
          {"n", r.n},
          {"scope", r.scope},
          {"instances", r.instances},
          {"violation_count", r.violation_count},
          {"clamped_instances", r.clamped_instances},
          {"wall_seconds", r.wall_seconds},
          {"violations", violations}};
}

nlohmann::json to_json(const VerifyReport &r) {
  auto checks = nlohmann::json::array();
  for (const auto &c : r.checks)
    checks.push_back(to_json(c));
  return {{"n", r.n},
          {"scope", std::string(to_string(r.scope))},
          {"checks", checks},
          {"failed", r.failed()},
          {"flagged", r.flagged()},
          {"ok", r.ok()},
          {"wall_seconds", r.wall_seconds}};
}

std::string summary_text(const VerifyReport &r) {
  std::ostringstream out;
  for (const auto &c : r.checks) {
    out << to_string(c.status()) << "  " << c.claim_id << "  instances=" << c.instances
        << " violations=" << c.violation_count;
    if (c.clamped_instances)
      out << " clamped=" << c.clamped_instances;
    if (c.expectation != Expectation::must_pass)
      out << " (" << to_string(c.expectation) << ")";
    out << "\n";
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.wall_seconds);
  out << r.checks.size() << " checks, " << r.failed() << " failed, " << r.flagged()
      << " flagged, n=" << r.n << ", " << secs << " s\n";
  return out.str();
}

} // namespace gran::oracle
