#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/cli/report.hpp"

namespace qdeform::cli {

struct IdentitiesOptions {
  std::string catalog = "all";
  int order = 6;
  /// "symbolic" or name=value tokens (q, p, r, s, eta, alpha, beta, gamma).
  std::vector<std::string> params{"symbolic"};
  std::uint64_t seed = 0;
};

struct RMatrixOptions {
  std::string family = "trig";
  std::string action = "ybe";
  std::string mode = "symbolic";
  int trials = 20;
  std::uint64_t seed = 42;
};

struct ClassicalOptions {
  std::string action = "cybe";
  std::optional<std::string> kind;  // all kinds when absent
};

struct ChainOptions {
  std::string family = "trig";
  int sites = 3;
  std::optional<std::string> q, a, b, z2, eta, xi, u2;
  std::string action = "hamiltonian";
  std::optional<std::string> z1, z2p;
  std::string form = "corrected";
  std::uint64_t seed = 1;
};

/// Each command validates its inputs (std::invalid_argument on bad values) and runs
/// the requested checks. Singular points surface as ArithmeticError.
Report cmd_identities(const IdentitiesOptions& o);
Report cmd_rmatrix(const RMatrixOptions& o);
Report cmd_classical(const ClassicalOptions& o);
Report cmd_chain(const ChainOptions& o);

/// Full command line (without the program name): parses, runs, writes the report
/// to out and diagnostics to err. Returns 0 (all pass), 1 (a check failed) or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdeform::cli
