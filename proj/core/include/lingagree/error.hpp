#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lingagree {

enum class ErrorCode {
  InvalidInterval,
  EmptyCollection,
  CombinatorialLimit,
  InvalidAlpha,
  InvalidDomain,
  InvalidMembership,
  EmptySet,
  TooFewSources,
  EmptySupport,
  InvalidCuts,
  InvalidSamples,
  ParseError,
  RangeError,
  DuplicateResponse,
  UnknownGroup,
  UnknownTerm,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library. The code is stable; the message is
// for humans and may carry file/line context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace lingagree
