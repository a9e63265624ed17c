#pragma once

#include <stdexcept>
#include <string>

namespace qdeform {

/// Operands built over incompatible structures (variable tables, presentations,
/// matrix shapes) or an input outside an operation's structural domain.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact arithmetic that has no value: division by zero, singular matrices,
/// non-invertible series.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A substitution or evaluation point annihilates a denominator.
class SingularSubstitution : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// A numeric parameter value makes a defining formula singular, e.g. q a root of
/// unity so that some (k)_q! vanishes.
class SingularParameter : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// An argument violates an operation's precondition (nonzero constant term,
/// out-of-range site index, unknown identity id, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qdeform
