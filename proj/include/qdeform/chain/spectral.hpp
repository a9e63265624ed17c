#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qdeform/chain/operator.hpp"
#include "qdeform/exact/univariate.hpp"

namespace qdeform::chain {

using exact::UPoly;

/// det(x I - A), exact (Hessenberg reduction over Q). Monic, coefficient i is x^i.
UPoly charpoly(const QMatrix& a);

/// Minimal polynomial of v under A (monic, degree = dim of the Krylov space).
UPoly krylov_polynomial(const QMatrix& a, const std::vector<BigRat>& v);
/// Exact minimal polynomial: Krylov polynomial of a seeded random vector, then
/// lcm with Krylov polynomials of standard basis vectors until p(A) = 0.
UPoly minpoly(const QMatrix& a, std::uint64_t seed);
/// p(A) by Horner.
QMatrix upoly_apply(const UPoly& p, const QMatrix& a);
bool squarefree(const UPoly& p);

/// Eigenvalues of the float image, via the strongly connected components of the
/// nonzero pattern (so block-triangular structure is respected), sorted by (real, imag).
std::vector<std::complex<double>> spectrum_float(const QMatrix& a);
/// Largest distance from a float eigenvalue to the nearest root of p, each
/// refined by Newton iteration on the squarefree part of p.
double root_mismatch(const UPoly& p, const std::vector<std::complex<double>>& eig);
/// Max |x_i - y_i| after sorting both lists; infinity when sizes differ.
double spectrum_distance(const std::vector<std::complex<double>>& x, const std::vector<std::complex<double>>& y);

struct EigenMultiplicity {
  BigRat value;
  int algebraic = 0;
  int geometric = 0;
};

struct SpectrumReport {
  UPoly charpoly;
  UPoly minpoly;
  bool diagonalizable = false;
  std::vector<std::complex<double>> eigenvalues;
  /// Rational eigenvalues found (float eigenvalues rounded to nearby rationals and confirmed exactly).
  std::vector<EigenMultiplicity> rational;
};

SpectrumReport jordan_report(const QMatrix& a, std::uint64_t seed);

/// "x^2 - 3/2*x + 1" style.
std::string upoly_to_string(const UPoly& p);
/// Coefficients, lowest first, as exact strings.
std::vector<std::string> upoly_coefficients(const UPoly& p);

}  // namespace qdeform::chain
