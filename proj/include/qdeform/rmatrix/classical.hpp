#pragma once

#include <string_view>

#include "qdeform/check.hpp"
#include "qdeform/rmatrix/tensor.hpp"

namespace qdeform::rmatrix {

enum class ClassicalKind { dj, ab, ab_tilde, bd, st };

ClassicalKind parse_classical_kind(std::string_view tag);  // DomainError on unknown tag
const char* classical_kind_name(ClassicalKind k);

struct ClassicalParams {
  RatFunc a = RatFunc::variable("a");
  RatFunc b = RatFunc::variable("b");
  RatFunc xi = RatFunc::variable("xi");
};

/// s- (x) s+ + s+ (x) s- + 1/2 sz (x) sz.
TensorMatrix casimir_t12();
/// r(x, y) of the given kind.
TensorMatrix build_classical(ClassicalKind kind, const RatFunc& x, const RatFunc& y, const ClassicalParams& p = {});

/// [r12,r13] + [r12,r23] + [r13,r23] == 0, symbolic in spectral variables and parameters.
CheckResult verify_CYBE(ClassicalKind kind, const ClassicalParams& p = {});

/// Tests (g x g) r~ (g x g)^{-1} == r and (g x g) r (g x g)^{-1} == r~ with g = 1 + 2b s-.
/// Passes when a direction holds; detail names which (both, for degenerate b).
CheckResult verify_gauge_equiv(const ClassicalParams& p = {});

}  // namespace qdeform::rmatrix
