#pragma once

#include <span>
#include <vector>

#include "entrance/features.hpp"

namespace entrance {

inline constexpr double kConstantFeatureStd = 1e-12;

// Per-feature standardization (x - mean) / std. Population moments; a
// feature whose std is below kConstantFeatureStd gets std = 1.
struct Scaler {
  std::vector<double> means;
  std::vector<double> stds;

  std::size_t dims() const noexcept { return means.size(); }

  static Scaler identity(std::size_t dims);

  friend bool operator==(const Scaler&, const Scaler&) = default;
};

Scaler fit_scaler(const Dataset& dataset);

std::vector<double> apply_scaler(const Scaler& scaler, std::span<const double> v);
FeatureVector apply_scaler(const Scaler& scaler, const FeatureVector& v);
std::vector<double> unapply_scaler(const Scaler& scaler, std::span<const double> z);

}  // namespace entrance
