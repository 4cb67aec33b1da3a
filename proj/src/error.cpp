#include "stewart/error.hpp"

namespace stewart {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RamifiedPrime: return "RamifiedPrime";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::InsufficientPrimes: return "InsufficientPrimes";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::IncompleteFactorization: return "IncompleteFactorization";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace stewart
