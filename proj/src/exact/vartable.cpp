#include "qdeform/exact/vartable.hpp"

#include <algorithm>
#include <set>

#include "qdeform/errors.hpp"
#include "qdeform/exact/monomial.hpp"

namespace qdeform::exact {

VarTablePtr VarTable::make(std::vector<std::string> names) {
  if (names.size() > kMaxVars) {
    throw StructuralError("variable table too large (max " + std::to_string(kMaxVars) + ")");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !seen.insert(n).second) throw StructuralError("duplicate or empty variable name '" + n + "'");
  }
  return VarTablePtr(new VarTable(std::move(names)));
}

const VarTablePtr& VarTable::standard() {
  static const VarTablePtr table = make({"q", "p", "r", "s", "eta", "xi", "a", "b", "z1", "z2", "z3",
                                         "u1", "u2", "u3", "z", "u", "alpha", "beta", "gamma", "x", "h"});
  return table;
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarTable::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw StructuralError("unknown variable '" + std::string(name) + "'");
}

}  // namespace qdeform::exact
