#include "entrance/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entrance/error.hpp"
#include "entrance/kernels.hpp"

namespace entrance {

NaiveBayesModel::NaiveBayesModel(Scaler scaler, std::array<GaussianClassStats, 2> classes)
    : scaler_(std::move(scaler)), classes_(std::move(classes)) {
  const std::size_t d = classes_[0].means.size();
  for (std::size_t c = 0; c < 2; ++c) {
    const auto& cls = classes_[c];
    if (cls.means.size() != d || cls.variances.size() != d) {
      throw Error(ErrorCode::kDimensionMismatch, "class statistics differ in width");
    }
    if (!std::isfinite(cls.log_prior) || cls.log_prior > 0.0) {
      throw Error(ErrorCode::kMalformedDocument, "log prior must be finite and <= 0");
    }
    log_norm_[c].resize(d);
    half_inv_var_[c].resize(d);
    for (std::size_t f = 0; f < d; ++f) {
      const double var = cls.variances[f];
      if (!(var > 0.0) || !std::isfinite(var) || !std::isfinite(cls.means[f])) {
        throw Error(ErrorCode::kMalformedDocument, "variances must be positive and finite");
      }
      log_norm_[c][f] = -0.5 * std::log(2.0 * std::numbers::pi * var);
      half_inv_var_[c][f] = 0.5 / var;
    }
  }
}

NaiveBayesModel train_nb(const Dataset& dataset) {
  if (dataset.empty()) throw Error(ErrorCode::kEmptyDataset, "naive Bayes needs rows");
  const std::size_t n = dataset.size();
  const std::size_t pos = dataset.positives();
  if (pos == 0 || pos == n) {
    throw Error(ErrorCode::kSingleClassDataset, "naive Bayes needs both classes");
  }
  const std::size_t d = dataset.dims();
  Scaler pooled = fit_scaler(dataset);

  // Pooled population variance straight from the data (the scaler's std
  // has the constant-feature fallback applied).
  std::vector<double> pooled_var(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = dataset.row(i);
    for (std::size_t f = 0; f < d; ++f) {
      const double dev = r[f] - pooled.means[f];
      pooled_var[f] += dev * dev;
    }
  }
  for (auto& v : pooled_var) v /= static_cast<double>(n);

  std::array<GaussianClassStats, 2> classes;
  const std::array<std::size_t, 2> counts = {n - pos, pos};
  for (std::size_t c = 0; c < 2; ++c) {
    auto& cls = classes[c];
    const auto cnt = static_cast<double>(counts[c]);
    cls.log_prior = std::log(cnt / static_cast<double>(n));
    cls.means.assign(d, 0.0);
    cls.variances.assign(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (dataset.target(i) != (c == 1)) continue;
      const auto r = dataset.row(i);
      for (std::size_t f = 0; f < d; ++f) cls.means[f] += r[f];
    }
    for (auto& m : cls.means) m /= cnt;
    for (std::size_t i = 0; i < n; ++i) {
      if (dataset.target(i) != (c == 1)) continue;
      const auto r = dataset.row(i);
      for (std::size_t f = 0; f < d; ++f) {
        const double dev = r[f] - cls.means[f];
        cls.variances[f] += dev * dev;
      }
    }
    for (std::size_t f = 0; f < d; ++f) {
      const double floor =
          std::max(kNbAbsoluteVarianceFloor, kNbRelativeVarianceFloor * pooled_var[f]);
      cls.variances[f] = std::max(cls.variances[f] / cnt, floor);
    }
  }
  return NaiveBayesModel(std::move(pooled), std::move(classes));
}

NbPrediction predict_nb(const NaiveBayesModel& model, std::span<const double> v) {
  if (v.size() != model.dims()) {
    throw Error(ErrorCode::kDimensionMismatch, "query width differs from model");
  }
  NbPrediction p;
  const auto& k = kernels::active();
  for (std::size_t c = 0; c < 2; ++c) {
    const auto& cls = model.classes()[c];
    k.gaussian_loglik(v.data(), 1, v.size(), cls.means.data(), model.half_inv_var(c).data(),
                      model.log_norm(c).data(), cls.log_prior, &p.log_posteriors[c]);
  }
  p.entrance = p.log_posteriors[1] > p.log_posteriors[0];
  return p;
}

}  // namespace entrance
