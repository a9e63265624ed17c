#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdeform/exact/mpoly.hpp"

namespace qdeform::exact {

/// Exact rational function: num / (den_mono * prod factor_i^mult_i).
///
/// The denominator is stored factored: a monomial part plus a canonical list of
/// primitive (integer, content 1, positive leading coefficient, no monomial content)
/// polynomial factors. Factors are never factored further; two denominators built
/// from the same pieces share factors, which keeps sums from multiplying unrelated
/// denominators together. The representation is not reduced, so equality is always
/// decided by cross-multiplication (ratfunc_equal).
class RatFunc {
 public:
  struct Factor {
    MPoly poly;
    unsigned mult = 1;
  };

  RatFunc() : RatFunc(VarTable::standard()) {}
  explicit RatFunc(VarTablePtr vars) : num_(std::move(vars)) {}
  RatFunc(MPoly num);  // NOLINT(google-explicit-constructor): polynomials embed implicitly
  /// den must be nonzero.
  RatFunc(MPoly num, const MPoly& den);

  static RatFunc constant(VarTablePtr vars, const BigRat& value) { return RatFunc(MPoly::constant(std::move(vars), value)); }
  static RatFunc variable(VarTablePtr vars, std::string_view name, std::uint32_t power = 1) {
    return RatFunc(MPoly::variable(std::move(vars), name, power));
  }
  /// Standard-table shorthands.
  static RatFunc constant(const BigRat& value) { return constant(VarTable::standard(), value); }
  static RatFunc variable(std::string_view name, std::uint32_t power = 1) {
    return variable(VarTable::standard(), name, power);
  }

  const VarTablePtr& vars() const { return num_.vars(); }
  const MPoly& num() const { return num_; }
  const Monomial& den_monomial() const { return den_mono_; }
  const std::vector<Factor>& den_factors() const { return factors_; }
  /// Same (factored) denominator, new numerator.
  RatFunc with_numerator(MPoly num) const;
  /// Expanded denominator.
  MPoly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool has_trivial_den() const { return den_mono_.is_one() && factors_.empty(); }
  /// Value if this is visibly a constant (constant numerator, trivial denominator).
  std::optional<BigRat> constant_value() const;
  bool is_one() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& other) { return *this = *this + other; }
  RatFunc& operator-=(const RatFunc& other) { return *this = *this - other; }
  RatFunc& operator*=(const RatFunc& other) { return *this = *this * other; }
  RatFunc& operator/=(const RatFunc& other) { return *this = *this / other; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Division by the zero function is an ArithmeticError.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const BigRat& s);
  friend RatFunc operator*(const BigRat& s, const RatFunc& a) { return a * s; }

  RatFunc inverse() const;
  /// Integer power; negative exponents invert (and so require a nonzero function).
  RatFunc pow(int exponent) const;

  /// Cancels shared monomial factors and any denominator factor that divides the
  /// numerator exactly.
  RatFunc& normalize();

  std::string to_string() const;

  /// Sum of many terms over a single common denominator (the lcm of the factored
  /// denominators), computed in one pass.
  static RatFunc sum(std::span<const RatFunc> terms, const VarTablePtr& vars);

 private:
  friend bool ratfunc_equal(const RatFunc& a, const RatFunc& b);
  friend class DenominatorLcm;

  void absorb_denominator(const MPoly& den);
  void cancel_monomial();
  void reset_if_zero();
  bool same_den(const RatFunc& other) const;

  MPoly num_;
  Monomial den_mono_;
  std::vector<Factor> factors_;
};

/// Decision procedure behind every identity check: a.num * b.den == b.num * a.den,
/// evaluated over the lcm of the factored denominators.
bool ratfunc_equal(const RatFunc& a, const RatFunc& b);

enum class RatOp { add, mul, div, neg };
RatFunc ratfunc_arithmetic(const RatFunc& a, const RatFunc& b, RatOp op);

/// Variable index -> replacement.
using Bindings = std::map<std::size_t, RatFunc>;
/// Builds bindings from variable names over f's table.
Bindings bind(const VarTablePtr& vars, const std::map<std::string, RatFunc>& by_name);

/// Exact composition. Throws SingularSubstitution naming the factor if the
/// substituted denominator vanishes identically.
RatFunc substitute(const RatFunc& f, const Bindings& bindings);
RatFunc substitute(const MPoly& p, const Bindings& bindings);

inline RatFunc field_inverse(const RatFunc& x) { return x.inverse(); }

/// Quotient-rule derivative.
RatFunc derivative(const RatFunc& f, std::size_t var);

}  // namespace qdeform::exact
