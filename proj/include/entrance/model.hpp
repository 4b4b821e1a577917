#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "entrance/features.hpp"
#include "entrance/knn.hpp"
#include "entrance/naive_bayes.hpp"
#include "entrance/svm.hpp"
#include "entrance/tree.hpp"

namespace entrance {

struct KnnParams {
  int k = kDefaultK;
};
struct NbParams {};
struct TreeParams {
  int max_depth = kDefaultMaxDepth;
  int min_samples_leaf = kDefaultMinSamplesLeaf;
};
struct SvmParams {
  double lambda = kDefaultSvmLambda;
  int epochs = kDefaultSvmEpochs;
  std::uint64_t seed = kDefaultSvmSeed;
};

// Classifier choice plus hyperparameters.
using AlgoConfig = std::variant<KnnParams, NbParams, TreeParams, SvmParams>;
using TrainedModel = std::variant<KnnModel, NaiveBayesModel, TreeModel, SvmModel>;

std::string_view algo_name(const AlgoConfig& config);
std::string_view algo_name(const TrainedModel& model);
/// Defaults for "knn", "nb", "tree" or "svm"; throws kUnknownAlgo.
AlgoConfig default_config(std::string_view name);

TrainedModel train(const AlgoConfig& config, const Dataset& dataset);

bool predict(const TrainedModel& model, std::span<const double> v);
/// Same answers as calling predict per row.
std::vector<bool> predict_batch(const TrainedModel& model, const Dataset& rows);

const Scaler& scaler_of(const TrainedModel& model);
std::size_t dims_of(const TrainedModel& model);

}  // namespace entrance
