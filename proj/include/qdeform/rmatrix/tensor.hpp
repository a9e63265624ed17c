#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdeform/exact/ratfunc.hpp"

namespace qdeform::rmatrix {

using exact::RatFunc;

/// Dense 2^legs x 2^legs matrix over RatFunc. Basis states are ordered
/// lexicographically in the leg states with leg 0 most significant:
/// |11>, |12>, |21>, |22> for two legs.
class TensorMatrix {
 public:
  explicit TensorMatrix(int legs);

  static TensorMatrix identity(int legs);
  /// 2x2 matrix from rows.
  static TensorMatrix single(const RatFunc& a11, const RatFunc& a12, const RatFunc& a21, const RatFunc& a22);
  static TensorMatrix kron(const TensorMatrix& a, const TensorMatrix& b);
  /// Swap of two legs (P_12 for legs = 2).
  static TensorMatrix permutation(int legs, int i, int j);

  int legs() const { return legs_; }
  std::size_t dim() const { return dim_; }
  const RatFunc& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  RatFunc& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  friend TensorMatrix operator*(const TensorMatrix& a, const TensorMatrix& b);
  friend TensorMatrix operator+(const TensorMatrix& a, const TensorMatrix& b);
  friend TensorMatrix operator-(const TensorMatrix& a, const TensorMatrix& b);
  friend TensorMatrix operator*(const TensorMatrix& a, const RatFunc& s);
  friend TensorMatrix operator*(const RatFunc& s, const TensorMatrix& a) { return a * s; }

  /// New leg k is old leg perm[k].
  TensorMatrix leg_permute(const std::vector<int>& perm) const;
  /// Places this matrix on the given legs of a total-leg space (identity elsewhere).
  TensorMatrix embed(int total_legs, const std::vector<int>& on) const;
  /// Exact Gauss-Jordan inverse; singular matrices throw ArithmeticError.
  TensorMatrix inverse() const;
  TensorMatrix substitute(const exact::Bindings& bindings) const;

  /// "(|12>,|21>)" style label for an entry.
  std::string entry_label(std::size_t r, std::size_t c) const;
  std::string to_string() const;

 private:
  int legs_;
  std::size_t dim_;
  std::vector<RatFunc> entries_;
};

/// First entry where ratfunc_equal fails, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const TensorMatrix& a, const TensorMatrix& b);
bool matrix_equal(const TensorMatrix& a, const TensorMatrix& b, std::string* why = nullptr);

/// Pauli-style single-leg matrices.
TensorMatrix sigma_plus();
TensorMatrix sigma_minus();
TensorMatrix sigma_z();
TensorMatrix unit_2();
TensorMatrix e_unit(int i, int j);  // e_ij, 1-based
/// q^{k h} on one leg: diag(q^k, q^{-k}).
TensorMatrix q_power_h(const RatFunc& q, int k);

}  // namespace qdeform::rmatrix
