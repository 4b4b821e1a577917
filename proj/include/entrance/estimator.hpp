#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "entrance/model.hpp"
#include "entrance/reading.hpp"

namespace entrance {

inline constexpr std::size_t kDefaultSmoothingWindow = 3;

// Ground truth is the entrance plane d = 0, so the error is |position|.
struct DetectionResult {
  std::string trace_id;
  std::size_t estimated_index = 0;
  double estimated_position_m = 0.0;
  double position_error_m = 0.0;
  std::vector<std::size_t> positives;  // after smoothing

  friend bool operator==(const DetectionResult&, const DetectionResult&) = default;
};

/// Per-reading predictions on raw features; the model must be 3 wide.
std::vector<bool> classify_trace(const TrainedModel& model, const Trace& trace);

/// Centred sliding majority, truncated at the ends; a tied window (only
/// possible when truncated) votes false. Throws kBadWindow unless the
/// window is odd and >= 1.
std::vector<bool> smooth(const std::vector<bool>& predictions, std::size_t window);

/// Middle (lower middle for even lengths) of the longest run of positives;
/// equal-length runs resolve to the earliest. Throws kNoEntranceDetected.
DetectionResult estimate_from_predictions(const Trace& trace, const std::vector<bool>& smoothed);

DetectionResult estimate_entrance(const TrainedModel& model, const Trace& trace,
                                  std::size_t window = kDefaultSmoothingWindow);

std::string detection_json(const DetectionResult& result);
std::string detection_json(const std::vector<DetectionResult>& results);
std::string detection_summary(const DetectionResult& result);

// Distribution of per-trace errors; traces with no detection count as
// infinite error and are tallied in `undetected`.
struct ErrorSummary {
  std::size_t traces = 0;
  std::size_t undetected = 0;
  double mean = 0.0;  // over detected traces
  double median = 0.0;
  double p90 = 0.0;
  double max = 0.0;
};

/// Percentiles interpolate linearly between order statistics.
ErrorSummary summarize_errors(std::vector<double> errors);
double percentile(std::vector<double> values, double q);

}  // namespace entrance
