#include "qhal/error.hpp"

namespace qhal {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonDivisor: return "NonDivisor";
    case ErrorCode::kNotSeparable: return "NotSeparable";
    case ErrorCode::kParityError: return "ParityError";
    case ErrorCode::kEvenDimension: return "EvenDimension";
    case ErrorCode::kBadExponent: return "BadExponent";
    case ErrorCode::kLatticeMismatch: return "LatticeMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotRiesz: return "NotRiesz";
    case ErrorCode::kFullLattice: return "FullLattice";
    case ErrorCode::kSupportViolation: return "SupportViolation";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace qhal
