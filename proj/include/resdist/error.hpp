#pragma once

#include <stdexcept>
#include <string>

namespace resdist {

enum class ErrorKind {
  // intersection-array validation
  EmptyArray,
  LengthMismatch,
  NonIntegralValency,
  NegativeIntersectionNumber,
  ZeroEntry,
  FirstCNotOne,
  Overflow,
  // evaluation
  DivisionByZero,
  StratumOutOfRange,
  DegreeOutOfRange,
  PoleEncountered,
  EigenFailure,
  // families and explicit graphs
  ParamOutOfDomain,
  ValidationFailed,
  TooLarge,
  InvalidGraph,
  NotDistanceRegular,
  SingularSystem,
  // serialization
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace resdist
