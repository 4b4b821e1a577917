#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "entrance/features.hpp"
#include "entrance/scaler.hpp"

namespace entrance {

inline constexpr int kDefaultK = 5;

// k-nearest-neighbour vote over standardized training rows.
class KnnModel {
 public:
  /// `stored` holds already-standardized rows. Throws kBadK unless k is odd
  /// and 1 <= k <= stored.size().
  KnnModel(int k, Scaler scaler, Dataset stored);

  int k() const noexcept { return k_; }
  const Scaler& scaler() const noexcept { return scaler_; }
  const Dataset& stored() const noexcept { return stored_; }
  std::span<const double> columns() const noexcept { return columns_; }

 private:
  int k_;
  Scaler scaler_;
  Dataset stored_;
  std::vector<double> columns_;
};

struct KnnPrediction {
  bool entrance = false;
  std::size_t votes_yes = 0;
  std::size_t votes_no = 0;
};

KnnModel train_knn(const Dataset& dataset, int k = kDefaultK);

/// Neighbours are the k smallest standardized Euclidean distances, ties
/// resolved by lower training index.
KnnPrediction predict_knn(const KnnModel& model, std::span<const double> v);

}  // namespace entrance
