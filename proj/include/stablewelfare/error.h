#pragma once

#include <stdexcept>
#include <string>

namespace stablewelfare {

enum class ErrorCode {
  kDimensionMismatch,
  kNegativeUtility,
  kTiedUtilities,
  kNonFinite,
  kOracleTooLarge,
  kPreconditionViolated,
  kUnstableInput,
  kRotationNotExposed,
  kInternalInvariantBroken,
  kCyclicGraph,
  kInvalidNetwork,
  kHorizonTooSmall,
  kTruthMismatch,
  kInvalidGap,
  kInvalidAlpha,
  kInvalidArgument,
  kParseError,
  kIoError,
};

const char* ToString(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the CLI
// maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ToString(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stablewelfare
