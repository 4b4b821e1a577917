#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entrance {

enum class ErrorCode {
  kMalformedHeader,
  kRowParseError,
  kRangeViolation,
  kNonpositiveRadius,
  kIndexOutOfRange,
  kEmptyDataset,
  kDimensionMismatch,
  kInvalidSpec,
  kBadK,
  kSingleClassDataset,
  kBadHyperparameter,
  kUnknownAlgo,
  kVersionMismatch,
  kMalformedDocument,
  kTooFewMinoritySamples,
  kBadWindow,
  kNoEntranceDetected,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception type; callers
// branch on code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace entrance
