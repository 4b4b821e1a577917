#include "entrance/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entrance/error.hpp"
#include "entrance/kernels.hpp"
#include "entrance/random.hpp"

namespace entrance {

namespace {

double objective_on_columns(std::span<const double> columns, std::span<const double> y,
                            std::span<const double> w, double b, double lambda) {
  const std::size_t n = y.size();
  std::vector<double> margins(n);
  kernels::active().affine(columns.data(), n, w.size(), w.data(), b, margins.data());
  double hinge = 0.0;
  for (std::size_t i = 0; i < n; ++i) hinge += std::max(0.0, 1.0 - y[i] * margins[i]);
  double norm2 = 0.0;
  for (double x : w) norm2 += x * x;
  return 0.5 * lambda * norm2 + hinge / static_cast<double>(n);
}

}  // namespace

SvmModel train_svm(const Dataset& dataset, double lambda, int epochs, std::uint64_t seed,
                   SvmTrainingLog* log) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kBadHyperparameter, "lambda must be > 0");
  }
  if (epochs < 1) throw Error(ErrorCode::kBadHyperparameter, "epochs must be >= 1");
  if (dataset.empty()) throw Error(ErrorCode::kEmptyDataset, "SVM needs rows");
  const std::size_t n = dataset.size();
  const std::size_t pos = dataset.positives();
  if (pos == 0 || pos == n) throw Error(ErrorCode::kSingleClassDataset, "SVM needs both classes");

  SvmModel model;
  model.scaler = fit_scaler(dataset);
  model.lambda = lambda;
  model.epochs = epochs;
  model.seed = seed;

  const std::size_t d = dataset.dims();
  std::vector<double> z;
  z.reserve(n * d);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = apply_scaler(model.scaler, dataset.row(i));
    z.insert(z.end(), row.begin(), row.end());
    y[i] = dataset.target(i) ? 1.0 : -1.0;
  }
  const auto columns = kernels::to_columns(z, d);

  std::vector<double> w(d, 0.0);
  double b = 0.0;
  std::vector<double> best_w = w;
  double best_b = b;
  double best_obj = INFINITY;

  Rng rng(seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t t = 0;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (auto i : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double* x = z.data() + i * d;
      double margin = b;
      for (std::size_t f = 0; f < d; ++f) margin += w[f] * x[f];
      const double shrink = 1.0 - eta * lambda;
      for (auto& wf : w) wf *= shrink;
      if (y[i] * margin < 1.0) {
        for (std::size_t f = 0; f < d; ++f) w[f] += eta * y[i] * x[f];
        b += eta * y[i];
      }
    }
    const double obj = objective_on_columns(columns, y, w, b, lambda);
    if (obj < best_obj) {
      best_obj = obj;
      best_w = w;
      best_b = b;
    }
    if (log != nullptr) {
      log->epoch_objective.push_back(obj);
      log->best_objective.push_back(best_obj);
    }
  }
  model.weights = std::move(best_w);
  model.bias = best_b;
  return model;
}

double svm_objective(const SvmModel& model, const Dataset& dataset) {
  const std::size_t n = dataset.size();
  std::vector<double> z;
  z.reserve(n * dataset.dims());
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = apply_scaler(model.scaler, dataset.row(i));
    z.insert(z.end(), row.begin(), row.end());
    y[i] = dataset.target(i) ? 1.0 : -1.0;
  }
  return objective_on_columns(kernels::to_columns(z, dataset.dims()), y, model.weights,
                              model.bias, model.lambda);
}

SvmPrediction predict_svm(const SvmModel& model, std::span<const double> v) {
  const auto z = apply_scaler(model.scaler, v);
  if (model.weights.size() != z.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "query width differs from model");
  }
  SvmPrediction p;
  kernels::active().affine(z.data(), 1, z.size(), model.weights.data(), model.bias, &p.margin);
  p.entrance = p.margin > 0.0;
  return p;
}

}  // namespace entrance
