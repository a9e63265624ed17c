#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qdeform/check.hpp"

namespace qdeform::cli {

inline constexpr const char* kToolName = "qdeform";
inline constexpr const char* kToolVersion = "1.0.0";

/// One command invocation's outcome. parameters keep insertion order.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  CheckReport checks;
  /// Optional payload (matrix entries, spectra, polynomials); omitted when null.
  nlohmann::ordered_json data;

  void param(std::string name, std::string value) { parameters.emplace_back(std::move(name), std::move(value)); }
  bool any_failed() const;
};

nlohmann::ordered_json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_text(const Report& r);
/// 1 if any check failed, else 0.
int exit_code(const Report& r);

}  // namespace qdeform::cli
