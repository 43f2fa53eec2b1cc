#pragma once

#include <stdexcept>
#include <string>

namespace ramal {

enum class ErrorKind {
  NullaryOperation,
  TableSize,
  EntryOutOfRange,
  CarrierTooLarge,
  ArityMismatch,
  IndexOutOfRange,
  BlockOrder,
  FixedPointPresent,
  EquivalenceViolation,
  OverlappingMonomials,
  IndexOverlap,
  DegenerateEquation,
  ModeScaleExceeded,
  ScaleExceeded,
  InsufficientVectors,
  ParseError,
};

const char* to_string(ErrorKind k);

/// Library-wide exception; `kind()` identifies the failed precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace ramal
