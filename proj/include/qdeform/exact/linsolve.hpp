#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qdeform/exact/bigrat.hpp"

namespace qdeform::exact {

inline BigRat field_inverse(const BigRat& x) { return BigRat(1) / x; }

template <class T>
using Rows = std::vector<std::vector<T>>;

/// Gauss-Jordan on [a | b] over an exact field: on success a becomes the identity and
/// b holds a^{-1} b. Returns false when a is singular (a and b are then garbage).
/// is_zero decides pivots; simplify runs on every freshly computed entry.
template <class T, class IsZero, class Simplify>
bool gauss_jordan(Rows<T>& a, Rows<T>& b, IsZero is_zero, Simplify simplify) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    const T inv = field_inverse(a[col][col]);
    for (std::size_t j = col; j < n; ++j) a[col][j] = simplify(a[col][j] * inv);
    for (auto& x : b[col]) x = simplify(x * inv);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || is_zero(a[row][col])) continue;
      const T f = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] = simplify(a[row][j] - f * a[col][j]);
      for (std::size_t j = 0; j < b[row].size(); ++j) b[row][j] = simplify(b[row][j] - f * b[col][j]);
    }
  }
  return true;
}

template <class T, class IsZero>
bool gauss_jordan(Rows<T>& a, Rows<T>& b, IsZero is_zero) {
  return gauss_jordan(a, b, is_zero, [](T x) { return x; });
}

}  // namespace qdeform::exact
