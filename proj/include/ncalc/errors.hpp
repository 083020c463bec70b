#pragma once

#include <stdexcept>
#include <string>

namespace ncalc {

enum class ErrorKind {
  ShapeMismatch,
  DimensionMismatch,
  NotAssociative,
  BadUnit,
  AlgebraMismatch,
  NotCentral,
  NotADerivation,
  NotInModule,
  UnknownPreset,
  BadParams,
  CoefficientNotCentral,
  LiftMismatch,
  ParseError,
  ValidationError,
  InternalCheck,
};

/// Stable machine-readable name ("not-a-derivation", "parse-error", ...).
const char* error_kind_name(ErrorKind k);

/// Library-wide exception. `location` is optional structured context,
/// e.g. a JSON path for parse errors or a basis index triple.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string location = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::string location_;
};

// Violated invariants that the library itself guarantees (as opposed to bad
// caller input) are reported through this; they indicate a bug, never a
// property of the input.
[[noreturn]] void internal_check_failed(const std::string& what);

}  // namespace ncalc
