#include "e7tensor/errors.hpp"

namespace e7tensor {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotStrictlyDominant: return "NotStrictlyDominant";
    case ErrorKind::WrongAlgebra: return "WrongAlgebra";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NonIntegerSolution: return "NonIntegerSolution";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoConsistentLabeling: return "NoConsistentLabeling";
    case ErrorKind::AmbiguousLabeling: return "AmbiguousLabeling";
    case ErrorKind::NegativeRemainder: return "NegativeRemainder";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
  }
  return "UnknownError";
}

}  // namespace e7tensor
