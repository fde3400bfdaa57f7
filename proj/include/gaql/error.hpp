#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gaql {

enum class ErrorCode {
  RingMismatch,
  IndexOutOfRange,
  LengthMismatch,
  ArityMismatch,
  ExponentOverflow,
  NotExactDivision,
  InvalidRing,
  Syntax,
  UnknownVariable,
  MalformedRational,
  DegreeExplosion,
  Uncertified,
  ActionLawViolated,
  MalformedGrid,
  UnknownName,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t line,
             std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace gaql
