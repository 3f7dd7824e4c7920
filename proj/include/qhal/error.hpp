#pragma once

#include <stdexcept>
#include <string>

namespace qhal {

// Numeric values are shared with the C API (qhal.h) and must stay stable.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kNonDivisor = 2,
  kNotSeparable = 3,
  kParityError = 4,
  kEvenDimension = 5,
  kBadExponent = 6,
  kLatticeMismatch = 7,
  kDimensionMismatch = 8,
  kNotRiesz = 9,
  kFullLattice = 10,
  kSupportViolation = 11,
  kDivisionByZero = 12,
  kParseError = 13,
  kIoError = 14,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qhal
