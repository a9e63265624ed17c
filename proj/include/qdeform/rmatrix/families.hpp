#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qdeform/check.hpp"
#include "qdeform/rmatrix/tensor.hpp"

namespace qdeform::rmatrix {

enum class Family { trig, rat, yang };

Family parse_family(std::string_view tag);  // DomainError on unknown tag
const char* family_name(Family f);

/// Parameter values for a family. Defaults are the symbols q, a, b, eta, xi.
struct FamilyParams {
  RatFunc q = RatFunc::variable("q");
  RatFunc a = RatFunc::variable("a");
  RatFunc b = RatFunc::variable("b");
  RatFunc eta = RatFunc::variable("eta");
  RatFunc xi = RatFunc::variable("xi");
};

/// Names of the spectral variables: z1 z2 z3 for trig, u1 u2 u3 otherwise.
std::vector<std::string> spectral_names(Family f);
/// Names of the family parameters that sampling draws.
std::vector<std::string> parameter_names(Family f);

TensorMatrix permutation_P();

TensorMatrix build_R0_trig(const RatFunc& q, const RatFunc& z1, const RatFunc& z2);
/// Undeformed rational R0 (shifted spectral variables of the trigonometric one).
TensorMatrix build_R0_rat(const RatFunc& q, const RatFunc& eta, const RatFunc& u1, const RatFunc& u2);

/// I + ((a zA + b) e11 - (a zA/q + q b) e22) (x) e21.
TensorMatrix build_F_trig(const RatFunc& q, const RatFunc& zA, const RatFunc& a, const RatFunc& b);
/// Same with a = xi, b = xi eta/(q^-2 - 1), z = u - eta/(q^-2 - 1); polynomial in q.
TensorMatrix build_F_rat(const RatFunc& q, const RatFunc& eta, const RatFunc& xi, const RatFunc& u);

/// F21(s1) R F(s2)^{-1}, with F21 the leg swap of F(s1).
TensorMatrix twist(const TensorMatrix& R, const TensorMatrix& F_s1, const TensorMatrix& F_s2);
/// twist applied to the family's R0 (trig or rat).
TensorMatrix twisted_R0(Family f, const FamilyParams& p, const RatFunc& s1, const RatFunc& s2);

/// Closed-form twisted R-matrix. yang is the q -> 1 substitution of rat.
TensorMatrix build_RF(Family f, const FamilyParams& p, const RatFunc& s1, const RatFunc& s2);
/// The q = 1 rational matrix in the printed sigma^z (x) sigma^z form. Kept as a negative control.
TensorMatrix build_rat_printed(const RatFunc& eta, const RatFunc& xi, const RatFunc& u1, const RatFunc& u2);

using RBuilder = std::function<TensorMatrix(const RatFunc&, const RatFunc&)>;

/// R12 R13 R23 == R23 R13 R12 on three legs; why gets the first differing entry.
bool ybe_holds(const TensorMatrix& r12, const TensorMatrix& r13, const TensorMatrix& r23, std::string* why = nullptr);
bool ybe_holds(const RBuilder& r, const RatFunc& s1, const RatFunc& s2, const RatFunc& s3, std::string* why = nullptr);

enum class Mode { symbolic, sampled };
Mode parse_mode(std::string_view tag);

/// Samples draws every name in `names` from a seeded RationalSampler and retries
/// (up to 100 times per point) when `attempt` throws ArithmeticError.
/// attempt returns false on a genuine failure, filling why.
struct SampleOutcome {
  int points = 0;
  int rejected = 0;
  bool ok = true;
  std::string why;
};
SampleOutcome run_sampled(const std::vector<std::string>& names, int trials, std::uint64_t seed,
                          const std::function<bool(const exact::Bindings&, std::string*)>& attempt);

/// YBE for a symbolic builder over the standard variables. Sampled mode builds the
/// three symbolic matrices once and substitutes each point.
CheckResult verify_YBE(const std::string& id, const RBuilder& r, const std::vector<std::string>& spectral,
                       const std::vector<std::string>& params, Mode mode, int trials, std::uint64_t seed);
CheckResult verify_YBE(Family f, Mode mode, int trials, std::uint64_t seed);

/// twisted_R0 == build_RF, symbolic.
CheckResult verify_twist_closed_form(Family f);
/// R^F(s, s) == P, symbolic.
CheckResult verify_rzz(Family f);

/// Universal twist evaluated in the representation: sum_k C_k(H) X^k with
/// C_k(H) = prod_{j<k} (q^{H+2j}-1)/(q^2-1) / (k)_{q^2}!. Series stops once X^k = 0.
/// hvals[i] is the eigenvalue of H on basis state i.
TensorMatrix universal_series(const RatFunc& q, const std::vector<int>& hvals, const TensorMatrix& X);

struct CocycleSides {
  TensorMatrix lhs;  // F12 (Delta x id)F
  TensorMatrix rhs;  // F23 (id x Delta)F
};
/// (A, B) = lambda (a, b) feed the universal series.
CocycleSides cocycle_sides(const RatFunc& q, const RatFunc& a, const RatFunc& b, const RatFunc& z2, const RatFunc& z3,
                           const RatFunc& lambda);
/// Two-leg image of the universal twist with spectral parameter z2.
TensorMatrix universal_two_leg(const RatFunc& q, const RatFunc& a, const RatFunc& b, const RatFunc& z2,
                               const RatFunc& lambda);
/// The factor lambda with universal_two_leg(lambda) == build_F_trig, fitted from one entry.
RatFunc fit_cocycle_lambda();

/// symbolic: fit lambda, check the two-leg image, then the cocycle. sampled: `trials` seeded points.
CheckResult verify_cocycle(Mode mode, int trials, std::uint64_t seed);

}  // namespace qdeform::rmatrix
