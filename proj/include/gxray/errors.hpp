#pragma once

#include <stdexcept>
#include <string>

namespace gxray {

/// Argument outside the mathematical domain of an operation (poles of Gamma, d < 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Mismatched variable counts or vector lengths.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division of a PiScalar by something other than a nonzero monomial.
class UnsupportedDivisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input violates a documented precondition (non-harmonic input, non-orthogonal matrix, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold exactly did not. Always indicates a bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gxray
