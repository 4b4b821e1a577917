#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace entrance {

enum class Label { kOutside, kEntrance, kInside };

std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view text);  // case-insensitive

inline constexpr double kDefaultEntranceRadius = 1.0;

inline constexpr double kMinRssDbm = -120.0;
inline constexpr double kMaxRssDbm = 0.0;
inline constexpr double kMinSnrDb = 0.0;
inline constexpr double kMaxSnrDb = 60.0;

/// Label of a reading at signed distance `distance_m` (positive outside).
/// Readings with |d| <= radius are Entrance; the boundary belongs to it.
Label label_from_distance(double distance_m, double radius_m);

// One row of an approach walk. snr_db is the mean C/N0 over the satellites
// visible at that instant.
struct SensorReading {
  int num_satellites = 0;
  double snr_db = 0.0;
  double rss_dbm = 0.0;
  double distance_m = 0.0;
  bool entrance = false;
  std::optional<Label> note;

  friend bool operator==(const SensorReading&, const SensorReading&) = default;
};

/// Throws Error{kRangeViolation} naming the offending field.
void validate_reading(const SensorReading& reading);

// Readings of a single walk, ordered outside -> inside.
class Trace {
 public:
  /// Throws Error{kInvalidSpec} when empty or distances are not strictly
  /// decreasing.
  Trace(std::string id, std::vector<SensorReading> readings);

  const std::string& id() const noexcept { return id_; }
  const std::vector<SensorReading>& readings() const noexcept { return readings_; }
  std::size_t size() const noexcept { return readings_.size(); }
  const SensorReading& operator[](std::size_t i) const { return readings_[i]; }

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::string id_;
  std::vector<SensorReading> readings_;
};

/// Splits a flat reading list into walks; a new walk starts whenever the
/// distance fails to decrease.
std::vector<Trace> split_traces(const std::vector<SensorReading>& readings,
                                std::string_view id_prefix = "trace");

}  // namespace entrance
