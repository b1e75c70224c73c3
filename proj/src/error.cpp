#include "roughcm/error.hpp"

namespace roughcm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::UnknownAttribute: return "unknown attribute";
    case ErrorCode::DegenerateDecision: return "degenerate decision";
    case ErrorCode::UniverseMismatch: return "universe mismatch";
    case ErrorCode::ShapeMismatch: return "shape mismatch";
    case ErrorCode::IndexOutOfRange: return "index out of range";
    case ErrorCode::UndefinedClass: return "undefined class";
    case ErrorCode::Range: return "range error";
    case ErrorCode::Config: return "config error";
    case ErrorCode::InstanceTooLarge: return "instance too large";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

}  // namespace roughcm
