#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qdeform/check.hpp"
#include "qdeform/nc/series.hpp"

namespace qdeform::nc {

/// Coefficient-field environment for the catalogue: q, p = q^a, r = q^b, s = q^c,
/// eta, and the Yangian exponents alpha, beta, gamma. Each is either the symbolic
/// variable of the same name or a rational.
class Params {
 public:
  static Params symbolic();
  const RatFunc& get(std::string_view name) const;
  Params with(const std::string& name, const RatFunc& value) const;
  const std::map<std::string, RatFunc>& values() const { return values_; }
  bool is_symbolic(const std::string& name) const;

 private:
  std::map<std::string, RatFunc> values_;
};

/// Q1..Q7, Q9..Q11, Q12, Q12W, Q13, Q15, Q15W, R1..R3, Y1..Y3, SUBQ, SUBF.
const std::vector<std::string>& identity_ids();
/// q-core, rational, yangian, proof-steps, all. Unknown names throw DomainError.
std::vector<std::string> catalogue(std::string_view name);
const std::vector<std::string>& catalogue_names();

/// Both (or, for Q15 and Q15W, all three) sides of a series identity. Exact
/// identities (Q12..Q15W) take the integer n and ignore order.
struct IdentityInstance {
  std::string id;
  std::vector<NCSeries> sides;
  bool exact = false;
};

IdentityInstance build_identity(std::string_view id, const Params& params, int order, int n = 1);

/// Builds and compares. Series identities compare coefficient-wise to the given
/// order; exact ones run n = 1..5; SUBQ/SUBF compare induced relations.
CheckResult verify_identity(std::string_view id, int order, const Params& params);

}  // namespace qdeform::nc
