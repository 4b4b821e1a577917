#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "entrance/features.hpp"
#include "entrance/model.hpp"

namespace entrance {

// Entrance is the positive class.
struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  void add(bool predicted, bool actual) noexcept;
  Confusion& operator+=(const Confusion& o) noexcept;

  friend bool operator==(const Confusion&, const Confusion&) = default;
};

// Zero denominators yield 0.
struct Metrics {
  Confusion confusion;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static Metrics from(const Confusion& c);

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

struct CvConfig {
  std::size_t folds = 5;
  std::uint64_t seed = 42;
};

struct Fold {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

/// Negatives then positives are shuffled with one Rng(seed) stream and dealt
/// round-robin into folds; the deal continues where the previous class
/// stopped. Throws kTooFewMinoritySamples when folds exceed the smaller
/// class and kBadHyperparameter when folds < 2.
std::vector<Fold> stratified_kfold(const Dataset& dataset, const CvConfig& config);

using Predictor = std::function<std::vector<bool>(const Dataset& rows)>;
using Trainer = std::function<Predictor(const Dataset& train)>;

/// Trains on each fold's training rows, predicts its test rows and pools
/// every prediction into one confusion matrix. `threads` > 1 runs folds
/// concurrently; the result does not depend on it.
Metrics evaluate_with(const Trainer& trainer, const Dataset& dataset, const CvConfig& config,
                      unsigned threads = 1);
Metrics evaluate(const AlgoConfig& algo, const Dataset& dataset, const CvConfig& config,
                 unsigned threads = 1);

/// The model each fold trains (scaler included) from its training rows only.
std::vector<TrainedModel> train_folds(const AlgoConfig& algo, const Dataset& dataset,
                                      const CvConfig& config);

struct BenchmarkRow {
  std::string algo;
  Metrics metrics;

  friend bool operator==(const BenchmarkRow&, const BenchmarkRow&) = default;
};

/// Default hyperparameters (the svm shuffles with config.seed), identical
/// folds, rows in order knn, svm, nb, tree.
std::vector<BenchmarkRow> benchmark_all(const Dataset& dataset, const CvConfig& config,
                                        unsigned threads = 1);

inline constexpr std::string_view kMetricsCsvHeader = "algo,accuracy,precision,recall,f1,tp,fp,fn,tn";

std::string metrics_csv(const std::vector<BenchmarkRow>& rows);
std::string metrics_json(const std::vector<BenchmarkRow>& rows);

}  // namespace entrance
