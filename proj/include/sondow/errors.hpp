#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sondow {

enum class ErrorKind {
  InvalidModulus,
  OutOfRange,
  BudgetExceeded,
  SegmentTooLarge,
  InvalidExponent,
  OracleBoundExceeded,
  Unsupported,
  Domain,
  PreconditionFailed,
  NotApplicable,
  RadicalConditionFailed,
  MembershipFailed,
  NotAMultiple,
  NotASondowNumber,
  RangeError,
  CheckpointParse,
  CheckpointMismatch,
  Parse,
  Format,
  InvalidHint,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every recoverable failure in the library is reported as an Error carrying
// its kind; callers that care (the CLI exit-code mapping, classify) switch on
// kind() rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sondow
