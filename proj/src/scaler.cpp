#include "entrance/scaler.hpp"

#include <cmath>

#include "entrance/error.hpp"

namespace entrance {

namespace {

void check_dims(const Scaler& scaler, std::size_t n) {
  if (n != scaler.dims()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector of length " + std::to_string(n) +
                                                   " for a scaler of width " +
                                                   std::to_string(scaler.dims()));
  }
}

}  // namespace

Scaler Scaler::identity(std::size_t dims) {
  return {std::vector<double>(dims, 0.0), std::vector<double>(dims, 1.0)};
}

Scaler fit_scaler(const Dataset& dataset) {
  if (dataset.empty()) throw Error(ErrorCode::kEmptyDataset, "cannot fit a scaler on 0 rows");
  const std::size_t d = dataset.dims();
  const double n = static_cast<double>(dataset.size());
  Scaler s{std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto r = dataset.row(i);
    for (std::size_t f = 0; f < d; ++f) s.means[f] += r[f];
  }
  for (auto& m : s.means) m /= n;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto r = dataset.row(i);
    for (std::size_t f = 0; f < d; ++f) {
      const double dev = r[f] - s.means[f];
      s.stds[f] += dev * dev;
    }
  }
  for (auto& sd : s.stds) {
    sd = std::sqrt(sd / n);
    if (sd < kConstantFeatureStd) sd = 1.0;
  }
  return s;
}

std::vector<double> apply_scaler(const Scaler& scaler, std::span<const double> v) {
  check_dims(scaler, v.size());
  std::vector<double> out(v.size());
  for (std::size_t f = 0; f < v.size(); ++f) out[f] = (v[f] - scaler.means[f]) / scaler.stds[f];
  return out;
}

FeatureVector apply_scaler(const Scaler& scaler, const FeatureVector& v) {
  return {v.schema, apply_scaler(scaler, std::span<const double>(v.values))};
}

std::vector<double> unapply_scaler(const Scaler& scaler, std::span<const double> z) {
  check_dims(scaler, z.size());
  std::vector<double> out(z.size());
  for (std::size_t f = 0; f < z.size(); ++f) out[f] = z[f] * scaler.stds[f] + scaler.means[f];
  return out;
}

}  // namespace entrance
