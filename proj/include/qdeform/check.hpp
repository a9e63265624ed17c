#pragma once

#include <string>
#include <vector>

namespace qdeform {

enum class CheckStatus { pass, fail, skip };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "fail";
}

/// One verification outcome. detail carries the first mismatch on failure.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
  double elapsed_ms = 0.0;

  bool passed() const { return status == CheckStatus::pass; }
};

using CheckReport = std::vector<CheckResult>;

}  // namespace qdeform
