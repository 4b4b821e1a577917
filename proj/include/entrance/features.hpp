#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "entrance/reading.hpp"

namespace entrance {

// kRaw3: [num_satellites, snr_db, rss_dbm].
// kWindowed6: window means of the three signals followed by their
// least-squares slopes against sample index.
enum class FeatureSchema { kRaw3, kWindowed6 };

std::size_t dimension(FeatureSchema schema);
std::span<const std::string_view> feature_names(FeatureSchema schema);
/// Schema for a given vector length; throws kDimensionMismatch otherwise.
FeatureSchema schema_for_dimension(std::size_t dims);

struct FeatureVector {
  FeatureSchema schema = FeatureSchema::kRaw3;
  std::vector<double> values;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

FeatureVector features_raw(const SensorReading& reading);

/// Window is readings [max(0, i - w + 1), i]. Throws kIndexOutOfRange for
/// i >= trace size and kInvalidSpec for w < 2.
FeatureVector features_windowed(const Trace& trace, std::size_t i, std::size_t w);

// Row-major feature matrix with binary entrance targets.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(FeatureSchema schema) : schema_(schema) {}

  void add(std::span<const double> row, bool target);
  void add(const FeatureVector& v, bool target);

  FeatureSchema schema() const noexcept { return schema_; }
  std::size_t dims() const noexcept { return dimension(schema_); }
  std::size_t size() const noexcept { return targets_.size(); }
  bool empty() const noexcept { return targets_.empty(); }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dims(), dims()};
  }
  bool target(std::size_t i) const { return targets_[i] != 0; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t positives() const noexcept;

  Dataset subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  FeatureSchema schema_ = FeatureSchema::kRaw3;
  std::vector<double> values_;
  std::vector<unsigned char> targets_;
};

/// Raw-feature dataset with each reading's entrance flag as target.
Dataset dataset_from_readings(std::span<const SensorReading> readings);
Dataset dataset_from_traces(std::span<const Trace> traces, FeatureSchema schema,
                            std::size_t window = 3);

}  // namespace entrance
