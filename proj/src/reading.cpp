#include "entrance/reading.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "entrance/error.hpp"

namespace entrance {

std::string_view to_string(Label label) {
  switch (label) {
    case Label::kOutside: return "Outside";
    case Label::kEntrance: return "Entrance";
    case Label::kInside: return "Inside";
  }
  return "";
}

std::optional<Label> parse_label(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "outside") return Label::kOutside;
  if (lower == "entrance") return Label::kEntrance;
  if (lower == "inside") return Label::kInside;
  return std::nullopt;
}

Label label_from_distance(double distance_m, double radius_m) {
  if (!(radius_m > 0.0)) {
    throw Error(ErrorCode::kNonpositiveRadius, "radius must be > 0");
  }
  if (std::abs(distance_m) <= radius_m) return Label::kEntrance;
  return distance_m > 0.0 ? Label::kOutside : Label::kInside;
}

void validate_reading(const SensorReading& r) {
  if (r.num_satellites < 0) {
    throw Error(ErrorCode::kRangeViolation, "num_satellites must be >= 0");
  }
  if (!std::isfinite(r.snr_db) || r.snr_db < kMinSnrDb || r.snr_db > kMaxSnrDb) {
    throw Error(ErrorCode::kRangeViolation, "snr_db outside [0, 60]");
  }
  if (!std::isfinite(r.rss_dbm) || r.rss_dbm < kMinRssDbm || r.rss_dbm > kMaxRssDbm) {
    throw Error(ErrorCode::kRangeViolation, "rss_dbm outside [-120, 0]");
  }
  if (!std::isfinite(r.distance_m)) {
    throw Error(ErrorCode::kRangeViolation, "distance_m must be finite");
  }
  if (r.note && (*r.note == Label::kEntrance) != r.entrance) {
    throw Error(ErrorCode::kRangeViolation, "entrance flag disagrees with note");
  }
}

Trace::Trace(std::string id, std::vector<SensorReading> readings)
    : id_(std::move(id)), readings_(std::move(readings)) {
  if (readings_.empty()) {
    throw Error(ErrorCode::kInvalidSpec, "trace '" + id_ + "' is empty");
  }
  for (std::size_t i = 1; i < readings_.size(); ++i) {
    if (!(readings_[i].distance_m < readings_[i - 1].distance_m)) {
      throw Error(ErrorCode::kInvalidSpec,
                  "trace '" + id_ + "' distances not strictly decreasing at " + std::to_string(i));
    }
  }
}

std::vector<Trace> split_traces(const std::vector<SensorReading>& readings,
                                std::string_view id_prefix) {
  std::vector<Trace> traces;
  std::vector<SensorReading> current;
  auto flush = [&] {
    if (current.empty()) return;
    traces.emplace_back(std::string(id_prefix) + "-" + std::to_string(traces.size()),
                        std::move(current));
    current.clear();
  };
  for (const auto& r : readings) {
    if (!current.empty() && !(r.distance_m < current.back().distance_m)) flush();
    current.push_back(r);
  }
  flush();
  return traces;
}

}  // namespace entrance
