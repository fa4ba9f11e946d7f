#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covrough {

enum class ErrorCode {
  EmptyUniverse,
  DuplicateName,
  EmptyName,
  UniverseTooLarge,
  UnknownLabel,
  UnknownElement,
  UniverseMismatch,
  EmptySet,
  NotACovering,
  IndexOutOfRange,
  CoveringTooLarge,
  OnlyTrivialSubcovering,
  IncompleteMapping,
  NotBijective,
  NotAHomomorphism,
  OutOfSupportedRange,
  UniverseTooLargeForEnumeration,
  InvalidArgument,
  ScopeTooLarge,
  UnknownLaw,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what
/// callers (and the CLI exit-code mapping) switch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covrough
