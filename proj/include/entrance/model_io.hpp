#pragma once

#include <string>
#include <string_view>

#include "entrance/model.hpp"

namespace entrance {

inline constexpr int kModelFormatVersion = 1;
inline constexpr std::string_view kModelFileExtension = ".model.json";

/// JSON document with `format_version`, `algo`, `scaler` and the
/// algorithm's parameters. Doubles are written in shortest round-trip form,
/// so a loaded model predicts bit-identically.
std::string save_model(const TrainedModel& model);

/// Throws kUnknownAlgo, kVersionMismatch, or kMalformedDocument (syntax
/// errors, missing or unknown fields, wrong types, broken invariants).
TrainedModel load_model(std::string_view text);

}  // namespace entrance
