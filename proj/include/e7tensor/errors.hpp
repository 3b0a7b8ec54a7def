#pragma once

#include <stdexcept>
#include <string>

namespace e7tensor {

// Error taxonomy. UsageError covers bad arguments a caller could have
// avoided; ConsistencyError covers violated internal invariants (a bug,
// corrupted data, or an impossible solve) and maps to exit code 2 in the CLI.
enum class ErrorKind {
  NotDominant,
  NotStrictlyDominant,
  WrongAlgebra,
  AlgebraMismatch,
  IndexOutOfRange,
  OrbitTooLarge,
  DegeneratePoint,
  SingularPoint,
  RankDeficient,
  NonIntegerSolution,
  NegativeCoefficient,
  DimensionMismatch,
  TooLarge,
  NoConsistentLabeling,
  AmbiguousLabeling,
  NegativeRemainder,
  ParseError,
  InconsistentSystem,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Consistency failures indicate corrupted data or a broken invariant,
  // not a caller mistake.
  bool is_consistency_failure() const {
    switch (kind_) {
      case ErrorKind::NonIntegerSolution:
      case ErrorKind::NegativeCoefficient:
      case ErrorKind::DimensionMismatch:
      case ErrorKind::NoConsistentLabeling:
      case ErrorKind::AmbiguousLabeling:
      case ErrorKind::NegativeRemainder:
      case ErrorKind::InconsistentSystem:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace e7tensor
