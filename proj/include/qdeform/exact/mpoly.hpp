#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdeform/exact/bigrat.hpp"
#include "qdeform/exact/monomial.hpp"
#include "qdeform/exact/vartable.hpp"

namespace qdeform::exact {

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted in strictly descending graded-lexicographic order with no
/// zero coefficients, so structural equality is mathematical equality.
class MPoly {
 public:
  struct Term {
    Monomial mono;
    BigRat coef;
  };

  MPoly() : MPoly(VarTable::standard()) {}
  explicit MPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

  static MPoly constant(VarTablePtr vars, const BigRat& value);
  static MPoly variable(VarTablePtr vars, std::string_view name, std::uint32_t power = 1);
  static MPoly variable(VarTablePtr vars, std::size_t index, std::uint32_t power = 1);
  static MPoly monomial(VarTablePtr vars, const Monomial& mono, const BigRat& coef);
  /// Builds from arbitrary (unsorted, possibly repeated or zero) terms.
  static MPoly from_terms(VarTablePtr vars, std::vector<Term> terms);

  const VarTablePtr& vars() const { return vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Value of a constant polynomial (zero included); nullopt otherwise.
  std::optional<BigRat> constant_value() const;
  /// Coefficient of the empty monomial.
  BigRat constant_term() const;

  const Term& leading_term() const { return terms_.front(); }
  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  std::uint32_t degree_in(std::size_t var) const;
  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other) { return *this = *this * other; }
  MPoly& operator*=(const BigRat& scalar);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const BigRat& s) { return a *= s; }
  friend MPoly operator*(const BigRat& s, MPoly a) { return a *= s; }

  MPoly mul_monomial(const Monomial& mono) const;
  /// Requires every term to be divisible by mono.
  MPoly div_monomial(const Monomial& mono) const;
  MPoly pow(unsigned exponent) const;

  /// Exact quotient if divisor divides *this, nullopt otherwise. Fails fast on the
  /// first leading term that is not divisible.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;

  MPoly derivative(std::size_t var) const;

  /// gcd of all term monomials.
  Monomial monomial_content() const;
  /// Positive rational c with (*this / c) integral and primitive; sign follows the
  /// leading coefficient so that *this / content() has a positive leading term.
  BigRat content() const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  /// Arbitrary but deterministic total order (used to canonicalize factor lists).
  friend bool structural_less(const MPoly& a, const MPoly& b);

 private:
  void check_same_table(const MPoly& other) const;
  MPoly& add_scaled(const MPoly& other, int sign);

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

enum class PolyOp { add, mul, neg };

/// Spec-level entry point; neg ignores b.
MPoly poly_arithmetic(const MPoly& a, const MPoly& b, PolyOp op);

}  // namespace qdeform::exact
