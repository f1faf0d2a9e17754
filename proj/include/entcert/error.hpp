#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entcert {

enum class ErrorKind {
  DivisionByZero,
  ParseError,
  SpecMismatch,
  IndexOutOfRange,
  ParamConstraintViolated,
  UnknownFamily,
  NotOrthogonal,
  NotBiseparable,
  SpanDeficient,
  NotZeroDimensional,
  NotShapePosition,
  NonConvergence,
  ResidualTooLarge,
  PreconditionFailed,
  OrthogonalityPreservationViolated,
  TrivialWitness,
  NonEliminatingWitness,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace entcert
