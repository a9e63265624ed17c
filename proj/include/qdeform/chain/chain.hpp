#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qdeform/chain/operator.hpp"
#include "qdeform/chain/spectral.hpp"
#include "qdeform/check.hpp"
#include "qdeform/rmatrix/families.hpp"

namespace qdeform::chain {

using rmatrix::Family;

/// Periodic chain of N sites. trig uses q, a, b and s2 = z2; rat uses q, eta, xi and
/// s2 = u2; yang is rat at q = 1 (q is ignored).
struct ChainSpec {
  int sites = 2;
  Family family = Family::trig;
  BigRat q = 2;
  BigRat a = 0;
  BigRat b = 0;
  BigRat eta = 0;
  BigRat xi = 0;
  BigRat s2 = 1;

  rmatrix::FamilyParams params() const;
  /// Same chain with the deformation switched off (a = b = 0, or xi = 0).
  ChainSpec undeformed() const;
  std::string describe() const;
};

/// Throws DomainError for a bad site count (2..10).
void validate(const ChainSpec& spec, int max_sites = 10);

/// R^F(z, s2) at a rational z as a 4x4 rational matrix.
QMatrix local_R(const ChainSpec& spec, const BigRat& z);
/// d/dz R^F(z, s2) at z = s2.
QMatrix local_R_derivative(const ChainSpec& spec);

/// t(z) = Tr_0 R_{0N}(z,s2) ... R_{01}(z,s2).
QMatrix transfer_matrix(const ChainSpec& spec, const BigRat& z);
CheckResult verify_transfer_commute(const ChainSpec& spec, const BigRat& z1, const BigRat& z2);

/// (q^-1 - q) s2 for trig, (q^-1 - q) s2 - q eta for rat, -eta for yang.
BigRat hamiltonian_prefactor(const ChainSpec& spec);
/// Sum of local densities prefactor * P R'(s2, s2) over the periodic bonds (k, k+1).
QMatrix hamiltonian_from_transfer(const ChainSpec& spec);
/// prefactor * (d/dz t)(s2) * t(s2)^{-1}, literally.
QMatrix hamiltonian_literal(const ChainSpec& spec);

enum class ClosedForm {
  corrected,  // (q+q^-1)/4 on sz sz, rat C with -q xi eta/2
  printed     // coefficients exactly as printed
};

struct Couplings {
  BigRat delta;  // sz sz
  BigRat C;
  BigRat D;
};
Couplings closed_couplings(const ChainSpec& spec, ClosedForm form = ClosedForm::corrected);
QMatrix hamiltonian_closed(int sites, const Couplings& c);
QMatrix hamiltonian_closed(const ChainSpec& spec, ClosedForm form = ClosedForm::corrected);

/// Returns c when diff = c I; otherwise nullopt and why names the worst entry.
std::optional<BigRat> identity_multiple(const QMatrix& diff, std::string* why = nullptr);

/// H_from_transfer - H_closed = c I; detail reports c and c/N.
CheckResult compare_hamiltonians(const ChainSpec& spec, ClosedForm form = ClosedForm::corrected);
/// Same comparison against explicitly given couplings (used for corrupted controls).
CheckResult compare_hamiltonians(const ChainSpec& spec, const Couplings& c, const std::string& id);

/// charpoly(H) == charpoly(H undeformed) exactly; float spectra within tol.
CheckResult verify_isospectral(const ChainSpec& spec, double tol = 1e-9);
/// <s|H|s'> = 0 whenever charge(s) > charge(s').
CheckResult verify_charge_triangular(const QMatrix& h, int sites, const std::string& id);

/// Spectrum and Jordan analysis of H_from_transfer.
SpectrumReport chain_spectrum(const ChainSpec& spec, std::uint64_t seed);
CheckResult verify_jordan(const ChainSpec& spec, std::uint64_t seed, SpectrumReport* out = nullptr);

}  // namespace qdeform::chain
