#include "entrance/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "entrance/csv.hpp"
#include "entrance/error.hpp"

namespace entrance {

std::vector<bool> classify_trace(const TrainedModel& model, const Trace& trace) {
  if (dims_of(model) != dimension(FeatureSchema::kRaw3)) {
    throw Error(ErrorCode::kDimensionMismatch, "trace detection needs a raw-feature model");
  }
  Dataset rows(FeatureSchema::kRaw3);
  for (const auto& r : trace.readings()) rows.add(features_raw(r), r.entrance);
  return predict_batch(model, rows);
}

std::vector<bool> smooth(const std::vector<bool>& predictions, std::size_t window) {
  if (window < 1 || window % 2 == 0) {
    throw Error(ErrorCode::kBadWindow, "window must be odd and >= 1, got " + std::to_string(window));
  }
  const std::size_t n = predictions.size();
  const std::size_t half = window / 2;
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(n - 1, i + half);
    std::size_t yes = 0;
    for (std::size_t j = lo; j <= hi; ++j) yes += predictions[j] ? 1 : 0;
    out[i] = 2 * yes > hi - lo + 1;
  }
  return out;
}

DetectionResult estimate_from_predictions(const Trace& trace, const std::vector<bool>& smoothed) {
  if (smoothed.size() != trace.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one prediction per reading expected");
  }
  DetectionResult result;
  result.trace_id = trace.id();
  std::size_t best_start = 0;
  std::size_t best_len = 0;
  std::size_t i = 0;
  while (i < smoothed.size()) {
    if (!smoothed[i]) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < smoothed.size() && smoothed[i]) result.positives.push_back(i++);
    if (i - start > best_len) {
      best_len = i - start;
      best_start = start;
    }
  }
  if (best_len == 0) {
    throw Error(ErrorCode::kNoEntranceDetected, "no entrance reading in trace '" + trace.id() + "'");
  }
  result.estimated_index = best_start + (best_len - 1) / 2;
  result.estimated_position_m = trace[result.estimated_index].distance_m;
  result.position_error_m = std::abs(result.estimated_position_m);
  return result;
}

DetectionResult estimate_entrance(const TrainedModel& model, const Trace& trace,
                                  std::size_t window) {
  return estimate_from_predictions(trace, smooth(classify_trace(model, trace), window));
}

namespace {

nlohmann::json to_json(const DetectionResult& r) {
  return {{"trace", r.trace_id},
          {"estimated_index", r.estimated_index},
          {"estimated_position_m", r.estimated_position_m},
          {"position_error_m", r.position_error_m},
          {"positives", r.positives}};
}

}  // namespace

std::string detection_json(const DetectionResult& result) { return to_json(result).dump(2) + "\n"; }

std::string detection_json(const std::vector<DetectionResult>& results) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : results) out.push_back(to_json(r));
  return out.dump(2) + "\n";
}

std::string detection_summary(const DetectionResult& r) {
  return r.trace_id + ": entrance at d=" + format_double(r.estimated_position_m) + " m (reading " +
         std::to_string(r.estimated_index) + "), error " + format_double(r.position_error_m) +
         " m, " + std::to_string(r.positives.size()) + " positive readings";
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  if (lo == hi || values[lo] == values[hi]) return values[lo];
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

ErrorSummary summarize_errors(std::vector<double> errors) {
  ErrorSummary s;
  s.traces = errors.size();
  double sum = 0.0;
  std::size_t detected = 0;
  for (double e : errors) {
    if (std::isinf(e)) {
      ++s.undetected;
      continue;
    }
    sum += e;
    ++detected;
    s.max = std::max(s.max, e);
  }
  if (s.undetected > 0) s.max = std::numeric_limits<double>::infinity();
  s.mean = detected == 0 ? 0.0 : sum / static_cast<double>(detected);
  s.median = percentile(errors, 0.5);
  s.p90 = percentile(errors, 0.9);
  return s;
}

}  // namespace entrance
