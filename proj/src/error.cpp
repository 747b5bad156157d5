#include "cycubic/error.hpp"

namespace cycubic {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidConductor: return "InvalidConductor";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorKind::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorKind::NormalizationFailure: return "NormalizationFailure";
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::IdentityFailure: return "IdentityFailure";
    case ErrorKind::ToleranceExceeded: return "ToleranceExceeded";
    case ErrorKind::RoundingFailure: return "RoundingFailure";
    case ErrorKind::MatchingFailure: return "MatchingFailure";
    case ErrorKind::ComplexRoots: return "ComplexRoots";
    case ErrorKind::RelationFailure: return "RelationFailure";
    case ErrorKind::CongruenceFailure: return "CongruenceFailure";
    case ErrorKind::GeneratorFailure: return "GeneratorFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      message_(message) {}

}  // namespace cycubic
