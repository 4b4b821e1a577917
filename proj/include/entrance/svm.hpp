#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "entrance/features.hpp"
#include "entrance/scaler.hpp"

namespace entrance {

inline constexpr double kDefaultSvmLambda = 0.01;
inline constexpr int kDefaultSvmEpochs = 200;
inline constexpr std::uint64_t kDefaultSvmSeed = 42;

// Linear SVM on standardized features; margin = w . z + b.
struct SvmModel {
  Scaler scaler;
  std::vector<double> weights;
  double bias = 0.0;
  double lambda = kDefaultSvmLambda;
  int epochs = kDefaultSvmEpochs;
  std::uint64_t seed = kDefaultSvmSeed;

  friend bool operator==(const SvmModel&, const SvmModel&) = default;
};

struct SvmTrainingLog {
  std::vector<double> epoch_objective;  // objective of the iterate at each epoch end
  std::vector<double> best_objective;   // running minimum of the above
};

/// Primal stochastic subgradient descent on
///   lambda/2 |w|^2 + mean_i max(0, 1 - y_i (w . z_i + b)),
/// step 1/(lambda t), one seeded shuffled pass per epoch; the bias is not
/// regularized. Returns the epoch-end iterate with the lowest objective.
SvmModel train_svm(const Dataset& dataset, double lambda = kDefaultSvmLambda,
                   int epochs = kDefaultSvmEpochs, std::uint64_t seed = kDefaultSvmSeed,
                   SvmTrainingLog* log = nullptr);

/// Objective on standardized rows with targets mapped to -1/+1.
double svm_objective(const SvmModel& model, const Dataset& dataset);

struct SvmPrediction {
  bool entrance = false;  // margin > 0; a zero margin is non-entrance
  double margin = 0.0;
};

SvmPrediction predict_svm(const SvmModel& model, std::span<const double> v);

}  // namespace entrance
