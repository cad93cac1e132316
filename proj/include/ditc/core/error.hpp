#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ditc {

enum class ErrorCode {
  InvalidInput,
  EndpointMismatch,
  OutOfRange,
  PatchNotFound,
  NoGlobalSection,
  NotConnected,
  NotRegular,
  SyntaxError,
  UnbalancedLocks,
  Unreachable,
  DimensionMismatch,
  InfiniteTraceSpace,
  NotIso,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::PatchNotFound: return "PatchNotFound";
    case ErrorCode::NoGlobalSection: return "NoGlobalSection";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnbalancedLocks: return "UnbalancedLocks";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InfiniteTraceSpace: return "InfiniteTraceSpace";
    case ErrorCode::NotIso: return "NotIso";
  }
  return "Unknown";
}

// Every domain failure in the library is reported through this type; the
// code is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ditc
