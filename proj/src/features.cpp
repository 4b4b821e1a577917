#include "entrance/features.hpp"

#include <array>
#include <cmath>

#include "entrance/error.hpp"

namespace entrance {

namespace {

constexpr std::array<std::string_view, 3> kRawNames = {"num_satellites", "snr_db", "rss_dbm"};
constexpr std::array<std::string_view, 6> kWindowedNames = {
    "mean_satellites", "mean_snr_db",    "mean_rss_dbm",
    "slope_satellites", "slope_snr_db", "slope_rss_dbm"};

std::array<double, 3> signals(const SensorReading& r) {
  return {static_cast<double>(r.num_satellites), r.snr_db, r.rss_dbm};
}

}  // namespace

std::size_t dimension(FeatureSchema schema) {
  return schema == FeatureSchema::kRaw3 ? 3 : 6;
}

std::span<const std::string_view> feature_names(FeatureSchema schema) {
  if (schema == FeatureSchema::kRaw3) return kRawNames;
  return kWindowedNames;
}

FeatureSchema schema_for_dimension(std::size_t dims) {
  if (dims == 3) return FeatureSchema::kRaw3;
  if (dims == 6) return FeatureSchema::kWindowed6;
  throw Error(ErrorCode::kDimensionMismatch, "no feature schema of length " + std::to_string(dims));
}

FeatureVector features_raw(const SensorReading& reading) {
  const auto s = signals(reading);
  return {FeatureSchema::kRaw3, {s[0], s[1], s[2]}};
}

FeatureVector features_windowed(const Trace& trace, std::size_t i, std::size_t w) {
  if (w < 2) throw Error(ErrorCode::kInvalidSpec, "window length must be >= 2");
  if (i >= trace.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(i) + " outside trace of " + std::to_string(trace.size()));
  }
  const std::size_t first = i + 1 >= w ? i + 1 - w : 0;
  const std::size_t n = i - first + 1;

  // Centred sample index keeps the slope numerator well conditioned.
  const double t_mean = static_cast<double>(n - 1) / 2.0;
  double t_ss = 0.0;
  std::array<double, 3> sum{};
  for (std::size_t j = first; j <= i; ++j) {
    const auto s = signals(trace[j]);
    for (std::size_t f = 0; f < 3; ++f) sum[f] += s[f];
    const double t = static_cast<double>(j - first) - t_mean;
    t_ss += t * t;
  }
  std::array<double, 3> mean{};
  for (std::size_t f = 0; f < 3; ++f) mean[f] = sum[f] / static_cast<double>(n);

  std::array<double, 3> slope{};
  if (n > 1) {
    std::array<double, 3> cross{};
    for (std::size_t j = first; j <= i; ++j) {
      const auto s = signals(trace[j]);
      const double t = static_cast<double>(j - first) - t_mean;
      for (std::size_t f = 0; f < 3; ++f) cross[f] += t * (s[f] - mean[f]);
    }
    for (std::size_t f = 0; f < 3; ++f) slope[f] = cross[f] / t_ss;
  }
  return {FeatureSchema::kWindowed6, {mean[0], mean[1], mean[2], slope[0], slope[1], slope[2]}};
}

void Dataset::add(std::span<const double> row, bool target) {
  if (row.size() != dims()) {
    throw Error(ErrorCode::kDimensionMismatch, "row of length " + std::to_string(row.size()) +
                                                   " in a dataset of width " +
                                                   std::to_string(dims()));
  }
  for (double v : row) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kRangeViolation, "non-finite feature value");
  }
  values_.insert(values_.end(), row.begin(), row.end());
  targets_.push_back(target ? 1 : 0);
}

void Dataset::add(const FeatureVector& v, bool target) {
  if (v.schema != schema_) throw Error(ErrorCode::kDimensionMismatch, "feature schema mismatch");
  add(std::span<const double>(v.values), target);
}

std::size_t Dataset::positives() const noexcept {
  std::size_t n = 0;
  for (auto t : targets_) n += t;
  return n;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out(schema_);
  out.values_.reserve(indices.size() * dims());
  out.targets_.reserve(indices.size());
  for (auto i : indices) {
    if (i >= size()) throw Error(ErrorCode::kIndexOutOfRange, "subset index out of range");
    const auto r = row(i);
    out.values_.insert(out.values_.end(), r.begin(), r.end());
    out.targets_.push_back(targets_[i]);
  }
  return out;
}

Dataset dataset_from_readings(std::span<const SensorReading> readings) {
  Dataset ds(FeatureSchema::kRaw3);
  for (const auto& r : readings) ds.add(features_raw(r), r.entrance);
  return ds;
}

Dataset dataset_from_traces(std::span<const Trace> traces, FeatureSchema schema,
                            std::size_t window) {
  Dataset ds(schema);
  for (const auto& trace : traces) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
      if (schema == FeatureSchema::kRaw3) {
        ds.add(features_raw(trace[i]), trace[i].entrance);
      } else {
        ds.add(features_windowed(trace, i, window), trace[i].entrance);
      }
    }
  }
  return ds;
}

}  // namespace entrance
