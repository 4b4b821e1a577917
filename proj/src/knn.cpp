#include "entrance/knn.hpp"

#include <algorithm>
#include <numeric>

#include "entrance/error.hpp"
#include "entrance/kernels.hpp"

namespace entrance {

KnnModel::KnnModel(int k, Scaler scaler, Dataset stored)
    : k_(k), scaler_(std::move(scaler)), stored_(std::move(stored)) {
  if (stored_.empty()) throw Error(ErrorCode::kEmptyDataset, "kNN needs at least one row");
  if (k_ < 1 || k_ % 2 == 0 || static_cast<std::size_t>(k_) > stored_.size()) {
    throw Error(ErrorCode::kBadK, "k = " + std::to_string(k_) + " must be odd and within [1, " +
                                      std::to_string(stored_.size()) + "]");
  }
  if (scaler_.dims() != stored_.dims()) {
    throw Error(ErrorCode::kDimensionMismatch, "scaler width differs from stored rows");
  }
  columns_ = kernels::to_columns(stored_.values(), stored_.dims());
}

KnnModel train_knn(const Dataset& dataset, int k) {
  if (dataset.empty()) throw Error(ErrorCode::kEmptyDataset, "kNN needs at least one row");
  Scaler scaler = fit_scaler(dataset);
  Dataset stored(dataset.schema());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    stored.add(apply_scaler(scaler, dataset.row(i)), dataset.target(i));
  }
  return KnnModel(k, std::move(scaler), std::move(stored));
}

KnnPrediction predict_knn(const KnnModel& model, std::span<const double> v) {
  const auto z = apply_scaler(model.scaler(), v);
  const std::size_t n = model.stored().size();
  std::vector<double> dist(n);
  kernels::active().squared_distances(model.columns().data(), n, z.size(), z.data(), dist.data());

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto k = static_cast<std::size_t>(model.k());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
                    });

  KnnPrediction p;
  for (std::size_t j = 0; j < k; ++j) {
    if (model.stored().target(order[j])) {
      ++p.votes_yes;
    } else {
      ++p.votes_no;
    }
  }
  p.entrance = p.votes_yes > p.votes_no;
  return p;
}

}  // namespace entrance
