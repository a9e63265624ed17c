#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdeform::exact {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

/// Ordered, immutable list of commutative parameter names. Polynomials keep a
/// reference to the table they were built over; mixing tables is a structural error.
class VarTable {
 public:
  static VarTablePtr make(std::vector<std::string> names);

  /// The table every module of the workbench builds over:
  /// q p r s eta xi a b z1 z2 z3 u1 u2 u3 z u alpha beta gamma x h.
  static const VarTablePtr& standard();

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find(), but an unknown name is a StructuralError.
  std::size_t index(std::string_view name) const;

  bool same_as(const VarTable& other) const { return this == &other || names_ == other.names_; }

 private:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

}  // namespace qdeform::exact
