#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycubic {

enum class ErrorKind {
  InvalidConductor,
  CountMismatch,
  ParityError,
  FactorizationMismatch,
  NotPrimitiveRoot,
  NormalizationFailure,
  NonIntegralCoefficient,
  IdentityFailure,
  ToleranceExceeded,
  RoundingFailure,
  MatchingFailure,
  ComplexRoots,
  RelationFailure,
  CongruenceFailure,
  GeneratorFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `what()` is "<Kind>: <message>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace cycubic
