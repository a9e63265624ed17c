#pragma once

#include <vector>

#include "qdeform/exact/mpoly.hpp"

namespace qdeform::exact {

/// Dense univariate polynomial over Q, coefficient i multiplies x^i. Trailing zeros trimmed.
using UPoly = std::vector<BigRat>;

void trim(UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_derivative(const UPoly& p);
/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly upoly_monic(UPoly p);
BigRat upoly_eval(const UPoly& p, const BigRat& x);
long double upoly_eval(const UPoly& p, long double x);

/// Converts a polynomial in at most one variable; the variable index is reported via
/// var (unchanged if the polynomial is constant). Multivariate input is a StructuralError.
UPoly to_upoly(const MPoly& p, std::size_t& var);
MPoly from_upoly(const UPoly& p, const VarTablePtr& vars, std::size_t var);

/// Monic gcd of two univariate polynomials in the same variable (Euclid over Q).
MPoly univar_gcd(const MPoly& a, const MPoly& b);

}  // namespace qdeform::exact
