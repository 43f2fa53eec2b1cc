#include "ramal/error.hpp"

namespace ramal {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NullaryOperation: return "NullaryOperation";
    case ErrorKind::TableSize: return "TableSize";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BlockOrder: return "BlockOrder";
    case ErrorKind::FixedPointPresent: return "FixedPointPresent";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::OverlappingMonomials: return "OverlappingMonomials";
    case ErrorKind::IndexOverlap: return "IndexOverlap";
    case ErrorKind::DegenerateEquation: return "DegenerateEquation";
    case ErrorKind::ModeScaleExceeded: return "ModeScaleExceeded";
    case ErrorKind::ScaleExceeded: return "ScaleExceeded";
    case ErrorKind::InsufficientVectors: return "InsufficientVectors";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ramal
