#pragma once

#include <stdexcept>
#include <string>

namespace ckosc {

enum class ErrorCode {
  NonPositiveMass,
  NonPositiveFrequency,
  Overdamped,
  NegativeDamping,
  NegativeHbar,
  InvalidInitialState,
  InvalidGrid,
  InvalidForce,
  OutOfRange,
  GridMismatch,
  StaleAccumulator,
  DegenerateWidth,
  ParseError,
  IoError,
  UnknownFigure,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ckosc
