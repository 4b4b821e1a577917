#include "entrance/evaluation.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <optional>
#include <thread>

#include <json.hpp>

#include "entrance/csv.hpp"
#include "entrance/error.hpp"
#include "entrance/random.hpp"

namespace entrance {

void Confusion::add(bool predicted, bool actual) noexcept {
  if (predicted && actual) {
    ++tp;
  } else if (predicted) {
    ++fp;
  } else if (actual) {
    ++fn;
  } else {
    ++tn;
  }
}

Confusion& Confusion::operator+=(const Confusion& o) noexcept {
  tp += o.tp;
  fp += o.fp;
  fn += o.fn;
  tn += o.tn;
  return *this;
}

Metrics Metrics::from(const Confusion& c) {
  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  Metrics m;
  m.confusion = c;
  m.accuracy = ratio(c.tp + c.tn, c.total());
  m.precision = ratio(c.tp, c.tp + c.fp);
  m.recall = ratio(c.tp, c.tp + c.fn);
  // 2TP / (2TP + FP + FN) equals the harmonic mean of precision and recall.
  m.f1 = ratio(2 * c.tp, 2 * c.tp + c.fp + c.fn);
  return m;
}

std::vector<Fold> stratified_kfold(const Dataset& dataset, const CvConfig& config) {
  if (config.folds < 2) throw Error(ErrorCode::kBadHyperparameter, "need at least 2 folds");
  const std::size_t pos = dataset.positives();
  const std::size_t minority = std::min(pos, dataset.size() - pos);
  if (minority < config.folds) {
    throw Error(ErrorCode::kTooFewMinoritySamples,
                std::to_string(config.folds) + " folds but the smaller class has " +
                    std::to_string(minority) + " rows");
  }

  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < dataset.size(); ++i) by_class[dataset.target(i) ? 1 : 0].push_back(i);

  Rng rng(config.seed);
  std::vector<Fold> folds(config.folds);
  std::size_t next = 0;
  for (auto& members : by_class) {
    rng.shuffle(std::span<std::size_t>(members));
    for (auto i : members) {
      folds[next].test.push_back(i);
      next = (next + 1) % config.folds;
    }
  }
  for (auto& fold : folds) {
    std::sort(fold.test.begin(), fold.test.end());
    fold.train.reserve(dataset.size() - fold.test.size());
    auto it = fold.test.begin();
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      if (it != fold.test.end() && *it == i) {
        ++it;
      } else {
        fold.train.push_back(i);
      }
    }
  }
  return folds;
}

namespace {

// Runs fn(f) for every fold; the first failure by fold order is rethrown.
template <typename Fn>
void for_each_fold(std::size_t n, unsigned threads, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  auto guarded = [&](std::size_t f) {
    try {
      fn(f);
    } catch (...) {
      errors[f] = std::current_exception();
    }
  };
  if (threads <= 1 || n <= 1) {
    for (std::size_t f = 0; f < n; ++f) guarded(f);
  } else {
    const std::size_t workers = std::min<std::size_t>(threads, n);
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t f = w; f < n; f += workers) guarded(f);
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

Metrics evaluate_with(const Trainer& trainer, const Dataset& dataset, const CvConfig& config,
                      unsigned threads) {
  const auto folds = stratified_kfold(dataset, config);
  std::vector<Confusion> per_fold(folds.size());
  for_each_fold(folds.size(), threads, [&](std::size_t f) {
    const Dataset train_rows = dataset.subset(folds[f].train);
    const Dataset test_rows = dataset.subset(folds[f].test);
    const auto predicted = trainer(train_rows)(test_rows);
    for (std::size_t i = 0; i < test_rows.size(); ++i) {
      per_fold[f].add(predicted[i], test_rows.target(i));
    }
  });
  Confusion pooled;
  for (const auto& c : per_fold) pooled += c;
  return Metrics::from(pooled);
}

Metrics evaluate(const AlgoConfig& algo, const Dataset& dataset, const CvConfig& config,
                 unsigned threads) {
  const Trainer trainer = [algo](const Dataset& train_rows) -> Predictor {
    auto model = std::make_shared<const TrainedModel>(train(algo, train_rows));
    return [model](const Dataset& rows) { return predict_batch(*model, rows); };
  };
  return evaluate_with(trainer, dataset, config, threads);
}

std::vector<TrainedModel> train_folds(const AlgoConfig& algo, const Dataset& dataset,
                                      const CvConfig& config) {
  std::vector<TrainedModel> models;
  for (const auto& fold : stratified_kfold(dataset, config)) {
    models.push_back(train(algo, dataset.subset(fold.train)));
  }
  return models;
}

std::vector<BenchmarkRow> benchmark_all(const Dataset& dataset, const CvConfig& config,
                                        unsigned threads) {
  std::vector<BenchmarkRow> rows;
  for (const char* name : {"knn", "svm", "nb", "tree"}) {
    auto algo = default_config(name);
    if (auto* svm = std::get_if<SvmParams>(&algo)) svm->seed = config.seed;
    rows.push_back({name, evaluate(algo, dataset, config, threads)});
  }
  return rows;
}

std::string metrics_csv(const std::vector<BenchmarkRow>& rows) {
  std::string out(kMetricsCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    const auto& m = r.metrics;
    const auto& c = m.confusion;
    out += r.algo + ',' + format_double(m.accuracy) + ',' + format_double(m.precision) + ',' +
           format_double(m.recall) + ',' + format_double(m.f1) + ',' + std::to_string(c.tp) + ',' +
           std::to_string(c.fp) + ',' + std::to_string(c.fn) + ',' + std::to_string(c.tn) + '\n';
  }
  return out;
}

std::string metrics_json(const std::vector<BenchmarkRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    const auto& m = r.metrics;
    const auto& c = m.confusion;
    out.push_back({{"algo", r.algo},
                   {"accuracy", m.accuracy},
                   {"precision", m.precision},
                   {"recall", m.recall},
                   {"f1", m.f1},
                   {"tp", c.tp},
                   {"fp", c.fp},
                   {"fn", c.fn},
                   {"tn", c.tn}});
  }
  return out.dump(2) + "\n";
}

}  // namespace entrance
