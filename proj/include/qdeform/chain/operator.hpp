#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdeform/exact/bigrat.hpp"
#include "qdeform/rmatrix/tensor.hpp"

namespace qdeform::chain {

using exact::BigRat;

/// Dense square matrix over Q. Chain operators on N sites are 2^N x 2^N with
/// site 1 the most significant bit of the basis index.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static QMatrix identity(std::size_t n);
  /// 2x2 from rows.
  static QMatrix two(const BigRat& a11, const BigRat& a12, const BigRat& a21, const BigRat& a22);
  /// Entries must be visibly constant; anything else is a StructuralError.
  static QMatrix from_tensor(const rmatrix::TensorMatrix& m);

  std::size_t size() const { return n_; }
  const BigRat& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  BigRat& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  bool is_zero() const;
  friend bool operator==(const QMatrix& x, const QMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator-(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator*(const QMatrix& x, const BigRat& s);
  friend QMatrix operator*(const BigRat& s, const QMatrix& x) { return x * s; }
  QMatrix& operator+=(const QMatrix& y);

  /// Gauss-Jordan; singular input is an ArithmeticError.
  QMatrix inverse() const;
  std::size_t rank() const;
  BigRat trace() const;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<BigRat> a_;
};

QMatrix commutator(const QMatrix& x, const QMatrix& y);

/// I (x) ... (x) op (x) ... (x) I with op (2x2) at site k, 1 <= k <= N.
QMatrix site_embed(const QMatrix& op, int k, int N);
/// A 4x4 two-site operator placed on sites (k, l), k first. Sites are 1-based and distinct.
QMatrix bond_embed(const QMatrix& op, int k, int l, int N);

QMatrix sigma_plus();
QMatrix sigma_minus();
QMatrix sigma_z();

/// Sum of sigma^z eigenvalues of a basis state of N sites.
int charge(std::size_t state, int N);
/// Cyclic translation by one site: |s1 s2 ... sN> -> |sN s1 ... s(N-1)>.
QMatrix cyclic_shift(int N);

}  // namespace qdeform::chain
