#ifndef TRIGSUM_ERRORS_HPP_
#define TRIGSUM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace trigsum {

/// A parameter violates a family's precondition (parity, coprimality,
/// validity range, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Base of the oracle's reconstruction failures.
class ReconstructionError : public std::runtime_error {
 public:
  explicit ReconstructionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// The scaled interval is too wide to single out one integer.
class AmbiguousReconstruction : public ReconstructionError {
 public:
  using ReconstructionError::ReconstructionError;
};

/// The scaled interval is narrow but contains no integer: the denominator
/// bound is wrong for this value.
class NoIntegerNearby : public ReconstructionError {
 public:
  using ReconstructionError::ReconstructionError;
};

/// Retries at increasing precision never produced a narrow enough interval.
class PrecisionExhausted : public ReconstructionError {
 public:
  using ReconstructionError::ReconstructionError;
};

}  // namespace trigsum

#endif  // TRIGSUM_ERRORS_HPP_
