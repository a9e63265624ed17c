#pragma once

#include <string>
#include <string_view>

#include "qdeform/nc/presentation.hpp"

namespace qdeform::nc {

/// Truncated power series over a presentation: normal words of degree <= order with
/// nonzero coefficients.
class NCSeries {
 public:
  NCSeries(PresentationPtr pres, int order);

  static NCSeries constant(PresentationPtr pres, const RatFunc& c, int order);
  static NCSeries generator(PresentationPtr pres, std::string_view name, int order);
  /// c * w, with w normal-ordered first.
  static NCSeries word(PresentationPtr pres, const Word& w, const RatFunc& c, int order);

  const PresentationPtr& presentation() const { return pres_; }
  int order() const { return order_; }
  const WordSum& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const Word& w) const;
  RatFunc constant_term() const { return coefficient({}); }
  /// Lowest degree present (order + 1 when zero).
  int valuation() const;

  NCSeries truncated(int order) const;
  /// Degree-d part.
  NCSeries homogeneous(int degree) const;

  NCSeries operator-() const;
  friend NCSeries operator+(const NCSeries& a, const NCSeries& b);
  friend NCSeries operator-(const NCSeries& a, const NCSeries& b);
  friend NCSeries operator*(const NCSeries& a, const NCSeries& b);
  friend NCSeries operator*(const NCSeries& a, const RatFunc& s);
  friend NCSeries operator*(const RatFunc& s, const NCSeries& a) { return a * s; }
  NCSeries& operator+=(const NCSeries& b) { return *this = *this + b; }
  NCSeries& operator*=(const NCSeries& b) { return *this = *this * b; }

  std::string to_string() const;

 private:
  void check_same(const NCSeries& other) const;
  void add_term(const Word& w, RatFunc c);

  PresentationPtr pres_;
  int order_ = 0;
  WordSum terms_;
};

enum class SeriesOp { add, mul, scalar_mul };

/// scalar_mul takes the scalar from b's constant term.
NCSeries series_arith(const NCSeries& a, const NCSeries& b, SeriesOp op);

/// Degree-by-degree recursion; a zero constant term is an ArithmeticError.
NCSeries inverse(const NCSeries& a);

/// Multiplies each coefficient by factor^(number of occurrences of gen).
NCSeries scale_variable(const NCSeries& a, std::string_view gen, const RatFunc& factor);

/// Sets a generator to zero (drops every word containing it).
NCSeries drop_generator(const NCSeries& a, std::string_view gen);

/// Coefficient-wise ratfunc_equal up to min(order). On mismatch, describes the
/// first differing word.
bool series_equal(const NCSeries& a, const NCSeries& b, std::string* mismatch = nullptr);

}  // namespace qdeform::nc
