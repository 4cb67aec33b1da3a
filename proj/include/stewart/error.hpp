#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stewart {

enum class ErrorKind {
  RamifiedPrime,
  NotPrime,
  NotSplit,
  ZeroElement,
  InsufficientPrimes,
  HypothesisViolation,
  IncompleteFactorization,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stewart
