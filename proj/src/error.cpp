#include "entrance/error.hpp"

namespace entrance {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kRowParseError: return "RowParseError";
    case ErrorCode::kRangeViolation: return "RangeViolation";
    case ErrorCode::kNonpositiveRadius: return "NonpositiveRadius";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kSingleClassDataset: return "SingleClassDataset";
    case ErrorCode::kBadHyperparameter: return "BadHyperparameter";
    case ErrorCode::kUnknownAlgo: return "UnknownAlgo";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kTooFewMinoritySamples: return "TooFewMinoritySamples";
    case ErrorCode::kBadWindow: return "BadWindow";
    case ErrorCode::kNoEntranceDetected: return "NoEntranceDetected";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace entrance
