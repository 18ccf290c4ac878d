#include "stablewelfare/error.h"

namespace stablewelfare {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNegativeUtility: return "NegativeUtility";
    case ErrorCode::kTiedUtilities: return "TiedUtilities";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kOracleTooLarge: return "OracleTooLarge";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kUnstableInput: return "UnstableInput";
    case ErrorCode::kRotationNotExposed: return "RotationNotExposedInMatching";
    case ErrorCode::kInternalInvariantBroken: return "InternalInvariantBroken";
    case ErrorCode::kCyclicGraph: return "CyclicGraph";
    case ErrorCode::kInvalidNetwork: return "InvalidNetwork";
    case ErrorCode::kHorizonTooSmall: return "HorizonTooSmall";
    case ErrorCode::kTruthMismatch: return "TruthMismatch";
    case ErrorCode::kInvalidGap: return "InvalidGap";
    case ErrorCode::kInvalidAlpha: return "InvalidAlpha";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace stablewelfare
