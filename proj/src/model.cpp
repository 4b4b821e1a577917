#include "entrance/model.hpp"

#include "entrance/error.hpp"
#include "entrance/kernels.hpp"

namespace entrance {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_width(const TrainedModel& model, std::size_t dims) {
  if (dims != dims_of(model)) {
    throw Error(ErrorCode::kDimensionMismatch, "rows of width " + std::to_string(dims) +
                                                   " for a model of width " +
                                                   std::to_string(dims_of(model)));
  }
}

}  // namespace

std::string_view algo_name(const AlgoConfig& config) {
  return std::visit(Overloaded{[](const KnnParams&) { return "knn"; },
                               [](const NbParams&) { return "nb"; },
                               [](const TreeParams&) { return "tree"; },
                               [](const SvmParams&) { return "svm"; }},
                    config);
}

std::string_view algo_name(const TrainedModel& model) {
  return std::visit(Overloaded{[](const KnnModel&) { return "knn"; },
                               [](const NaiveBayesModel&) { return "nb"; },
                               [](const TreeModel&) { return "tree"; },
                               [](const SvmModel&) { return "svm"; }},
                    model);
}

AlgoConfig default_config(std::string_view name) {
  if (name == "knn") return KnnParams{};
  if (name == "nb") return NbParams{};
  if (name == "tree") return TreeParams{};
  if (name == "svm") return SvmParams{};
  throw Error(ErrorCode::kUnknownAlgo, "unknown algorithm '" + std::string(name) + "'");
}

TrainedModel train(const AlgoConfig& config, const Dataset& dataset) {
  return std::visit(
      Overloaded{
          [&](const KnnParams& p) -> TrainedModel { return train_knn(dataset, p.k); },
          [&](const NbParams&) -> TrainedModel { return train_nb(dataset); },
          [&](const TreeParams& p) -> TrainedModel {
            return train_tree(dataset, p.max_depth, p.min_samples_leaf);
          },
          [&](const SvmParams& p) -> TrainedModel {
            return train_svm(dataset, p.lambda, p.epochs, p.seed);
          }},
      config);
}

bool predict(const TrainedModel& model, std::span<const double> v) {
  return std::visit(
      Overloaded{[&](const KnnModel& m) { return predict_knn(m, v).entrance; },
                 [&](const NaiveBayesModel& m) { return predict_nb(m, v).entrance; },
                 [&](const TreeModel& m) { return predict_tree(m, v); },
                 [&](const SvmModel& m) { return predict_svm(m, v).entrance; }},
      model);
}

std::vector<bool> predict_batch(const TrainedModel& model, const Dataset& rows) {
  check_width(model, rows.dims());
  const std::size_t n = rows.size();
  std::vector<bool> out(n);
  const auto& k = kernels::active();

  if (const auto* nb = std::get_if<NaiveBayesModel>(&model)) {
    const auto cols = kernels::to_columns(rows.values(), rows.dims());
    std::array<std::vector<double>, 2> lp{std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t c = 0; c < 2; ++c) {
      const auto& cls = nb->classes()[c];
      k.gaussian_loglik(cols.data(), n, rows.dims(), cls.means.data(),
                        nb->half_inv_var(c).data(), nb->log_norm(c).data(), cls.log_prior,
                        lp[c].data());
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = lp[1][i] > lp[0][i];
    return out;
  }
  if (const auto* svm = std::get_if<SvmModel>(&model)) {
    std::vector<double> z;
    z.reserve(rows.values().size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = apply_scaler(svm->scaler, rows.row(i));
      z.insert(z.end(), r.begin(), r.end());
    }
    const auto cols = kernels::to_columns(z, rows.dims());
    std::vector<double> margins(n);
    k.affine(cols.data(), n, rows.dims(), svm->weights.data(), svm->bias, margins.data());
    for (std::size_t i = 0; i < n; ++i) out[i] = margins[i] > 0.0;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = predict(model, rows.row(i));
  return out;
}

const Scaler& scaler_of(const TrainedModel& model) {
  return std::visit(Overloaded{[](const KnnModel& m) -> const Scaler& { return m.scaler(); },
                               [](const NaiveBayesModel& m) -> const Scaler& { return m.scaler(); },
                               [](const TreeModel& m) -> const Scaler& { return m.scaler; },
                               [](const SvmModel& m) -> const Scaler& { return m.scaler; }},
                    model);
}

std::size_t dims_of(const TrainedModel& model) {
  return std::visit(Overloaded{[](const KnnModel& m) { return m.stored().dims(); },
                               [](const NaiveBayesModel& m) { return m.dims(); },
                               [](const TreeModel& m) { return m.dims; },
                               [](const SvmModel& m) { return m.weights.size(); }},
                    model);
}

}  // namespace entrance
