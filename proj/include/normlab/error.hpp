#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace normlab {

enum class ErrorKind {
  PointOutOfRange,
  DuplicatePoint,
  DegreeMismatch,
  EmptyDegree,
  OrderTooLarge,
  AmbientMismatch,
  NotASubgroup,
  NotNormal,
  IndexTooLarge,
  InvalidPrime,
  NotSolvable,
  NotNilpotent,
  NotPGroup,
  DoesNotNormalize,
  InvalidParameter,
  NotPrime,
  ParseError,
  SubgroupNotContained,
  UnknownTheorem,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the scanner, the CLI) can map it onto a status or exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace normlab
