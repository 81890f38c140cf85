#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cevian {

enum class ErrorCode {
  InvalidPoint,
  InvalidIndexSet,
  DimensionMismatch,
  InvalidArgument,
  ProjectionUndefined,
  DegenerateTriangle,
  PointNotOnSide,
  IndeterminateRatio,
  NotOnS,
  NotOnH,
  NotInImage,
  WrongArity,
  OffTorus,
  NotRankOneCompletable,
  ParseError,
};

/// Stable identifier used in diagnostics and JSON reports, e.g. "DegenerateTriangle".
std::string_view to_string(ErrorCode code) noexcept;

/// All library failures surface as this exception; `code()` tells callers which
/// precondition was violated without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cevian
