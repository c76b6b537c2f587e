#pragma once

#include <stdexcept>
#include <string>

namespace freefield {

enum class ErrorKind {
  UnsupportedLabel,
  DimensionMismatch,
  NotDominantIntegral,
  DimensionBoundExceeded,
  InternalInconsistency,
  CutoffExceeded,
  BoundExceeded,
  Criticality,
  VerificationFailed,
  UnresolvedRootLabel,
  NonIntegralQuotient,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace freefield
