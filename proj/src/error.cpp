#include "freefield/error.hpp"

namespace freefield {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedLabel: return "unsupported-label";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NotDominantIntegral: return "not-dominant-integral";
    case ErrorKind::DimensionBoundExceeded: return "dimension-bound-exceeded";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::CutoffExceeded: return "cutoff-exceeded";
    case ErrorKind::BoundExceeded: return "bound-exceeded";
    case ErrorKind::Criticality: return "criticality";
    case ErrorKind::VerificationFailed: return "verification-failed";
    case ErrorKind::UnresolvedRootLabel: return "unresolved-root-label";
    case ErrorKind::NonIntegralQuotient: return "non-integral-quotient";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace freefield
