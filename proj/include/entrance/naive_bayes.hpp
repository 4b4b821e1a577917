#pragma once

#include <array>
#include <span>
#include <vector>

#include "entrance/features.hpp"
#include "entrance/scaler.hpp"

namespace entrance {

inline constexpr double kNbRelativeVarianceFloor = 1e-2;
inline constexpr double kNbAbsoluteVarianceFloor = 1e-9;

struct GaussianClassStats {
  double log_prior = 0.0;
  std::vector<double> means;
  std::vector<double> variances;

  friend bool operator==(const GaussianClassStats&, const GaussianClassStats&) = default;
};

// Gaussian naive Bayes on raw features. Index 0 is the non-entrance class,
// index 1 the entrance class.
class NaiveBayesModel {
 public:
  NaiveBayesModel(Scaler scaler, std::array<GaussianClassStats, 2> classes);

  const Scaler& scaler() const noexcept { return scaler_; }
  const std::array<GaussianClassStats, 2>& classes() const noexcept { return classes_; }
  std::size_t dims() const noexcept { return classes_[0].means.size(); }

  // Per-feature -0.5 log(2 pi var) and 0.5 / var, precomputed for the kernel.
  std::span<const double> log_norm(std::size_t c) const { return log_norm_[c]; }
  std::span<const double> half_inv_var(std::size_t c) const { return half_inv_var_[c]; }

 private:
  Scaler scaler_;
  std::array<GaussianClassStats, 2> classes_;
  std::array<std::vector<double>, 2> log_norm_;
  std::array<std::vector<double>, 2> half_inv_var_;
};

struct NbPrediction {
  bool entrance = false;
  std::array<double, 2> log_posteriors{};  // unnormalized; [no, yes]
};

/// Priors are class frequencies; variances are population variances floored
/// at max(1e-9, 0.01 * pooled variance of the feature).
NaiveBayesModel train_nb(const Dataset& dataset);

/// Ties go to the non-entrance class.
NbPrediction predict_nb(const NaiveBayesModel& model, std::span<const double> v);

}  // namespace entrance
