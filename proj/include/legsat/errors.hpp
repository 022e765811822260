#ifndef LEGSAT_ERRORS_HPP_
#define LEGSAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace legsat {

// Domain errors abort the current computation with a message; the CLI maps
// them to exit code 1.  Usage errors are the argument parser's business.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveInput : DomainError {
  using DomainError::DomainError;
};
struct StrandMismatch : DomainError {
  using DomainError::DomainError;
};
struct OrientationMismatch : DomainError {
  using DomainError::DomainError;
};
struct ClosedWord : DomainError {
  using DomainError::DomainError;
};
struct BudgetExhausted : DomainError {
  using DomainError::DomainError;
};
struct MultiComponentCompanion : DomainError {
  using DomainError::DomainError;
};
struct NonPositiveBraid : DomainError {
  using DomainError::DomainError;
};
struct HypothesisNotDeclared : DomainError {
  using DomainError::DomainError;
};
struct ParityViolation : DomainError {
  using DomainError::DomainError;
};
struct EvenM : DomainError {
  using DomainError::DomainError;
};
struct UnsupportedFamily : DomainError {
  using DomainError::DomainError;
};
// A negative intermediate in a counting formula means the table and the
// profile contradict each other; we refuse to clamp.
struct TableInconsistency : DomainError {
  using DomainError::DomainError;
};

}  // namespace legsat

#endif  // LEGSAT_ERRORS_HPP_
