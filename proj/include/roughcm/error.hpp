#pragma once

#include <stdexcept>
#include <string>

namespace roughcm {

enum class ErrorCode {
  InvalidArgument = 1,
  UnknownAttribute,
  DegenerateDecision,
  UniverseMismatch,
  ShapeMismatch,
  IndexOutOfRange,
  UndefinedClass,
  Range,
  Config,
  InstanceTooLarge,
  Parse,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace roughcm
