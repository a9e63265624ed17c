#include "qdeform/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qdeform::cli {

bool Report::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = r.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["seed"] = r.seed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = status_name(c.status);
    e["detail"] = c.detail;
    // 0.001 ms resolution keeps the output readable
    e["elapsed_ms"] = std::round(c.elapsed_ms * 1000.0) / 1000.0;
    checks.push_back(e);
  }
  j["checks"] = checks;
  if (!r.data.is_null()) j["data"] = r.data;
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << "  " << r.command;
  for (const auto& [k, v] : r.parameters) os << "  " << k << "=" << v;
  os << "  seed=" << r.seed << "\n";
  std::size_t w = 2;
  for (const auto& c : r.checks) w = std::max(w, c.id.size());
  char buf[64];
  os << std::string(w, '-') << "  ------  ----------  ------\n";
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%10.1f", c.elapsed_ms);
    os << c.id << std::string(w - c.id.size(), ' ') << "  " << status_name(c.status)
       << std::string(6 - std::string(status_name(c.status)).size(), ' ') << "  " << buf << "  " << c.detail << "\n";
  }
  const auto failed = std::count_if(r.checks.begin(), r.checks.end(),
                                    [](const CheckResult& c) { return c.status == CheckStatus::fail; });
  os << r.checks.size() << " checks, " << failed << " failed\n";
  if (!r.data.is_null()) os << "data: " << r.data.dump(2) << "\n";
  return os.str();
}

int exit_code(const Report& r) { return r.any_failed() ? 1 : 0; }

}  // namespace qdeform::cli
