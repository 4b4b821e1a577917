#include <doctest.h>

#include <json.hpp>
#include <set>

#include "entrance/error.hpp"
#include "entrance/evaluation.hpp"
#include "entrance/synthetic.hpp"

using namespace entrance;

namespace {

// 100 rows, 20 positive; feature 0 carries the label.
Dataset labelled_rows(std::size_t n = 100, std::size_t positives = 20) {
  Dataset ds(FeatureSchema::kRaw3);
  for (std::size_t i = 0; i < n; ++i) {
    const bool y = i % (n / positives) == 0;
    ds.add(std::vector<double>{y ? 1.0 : 0.0, static_cast<double>(i), -1.0}, y);
  }
  return ds;
}

Predictor constant(bool value) {
  return [value](const Dataset& rows) { return std::vector<bool>(rows.size(), value); };
}

}  // namespace

TEST_CASE("Metrics identities") {
  const Confusion c{3, 1, 2, 4};
  const auto m = Metrics::from(c);
  CHECK(m.accuracy == 0.7);
  CHECK(m.precision == 0.75);
  CHECK(m.recall == 0.6);
  CHECK(m.f1 == doctest::Approx(2 * 0.75 * 0.6 / (0.75 + 0.6)).epsilon(1e-15));

  const auto empty = Metrics::from(Confusion{0, 0, 5, 5});
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);
  CHECK(Metrics::from(Confusion{}).accuracy == 0.0);
}

TEST_CASE("stratified_kfold") {
  const auto ds = labelled_rows();
  const auto folds = stratified_kfold(ds, {5, 42});
  REQUIRE(folds.size() == 5);
  std::vector<int> seen(ds.size(), 0);
  for (const auto& fold : folds) {
    std::size_t pos = 0;
    for (auto i : fold.test) pos += ds.target(i), ++seen[i];
    CHECK(pos == 4);
    CHECK(fold.test.size() - pos == 16);
    CHECK(fold.train.size() + fold.test.size() == ds.size());
    std::set<std::size_t> train(fold.train.begin(), fold.train.end());
    for (auto i : fold.test) CHECK_FALSE(train.contains(i));
    CHECK(std::is_sorted(fold.test.begin(), fold.test.end()));
  }
  for (int s : seen) CHECK(s == 1);

  SUBCASE("determinism") {
    const auto again = stratified_kfold(ds, {5, 42});
    for (std::size_t f = 0; f < 5; ++f) CHECK(again[f].test == folds[f].test);
    const auto other = stratified_kfold(ds, {5, 43});
    bool differs = false;
    for (std::size_t f = 0; f < 5; ++f) differs |= other[f].test != folds[f].test;
    CHECK(differs);
  }
  SUBCASE("class proportions within one sample for uneven counts") {
    const auto odd = labelled_rows(97, 13);
    const double rate = static_cast<double>(odd.positives()) / static_cast<double>(odd.size());
    for (const auto& fold : stratified_kfold(odd, {4, 1})) {
      std::size_t pos = 0;
      for (auto i : fold.test) pos += odd.target(i);
      CHECK(std::abs(static_cast<double>(pos) - rate * static_cast<double>(fold.test.size())) <= 1.0);
    }
  }
  SUBCASE("errors") {
    Dataset one(FeatureSchema::kRaw3);
    one.add(std::vector<double>{1, 0, 0}, true);
    for (int i = 0; i < 5; ++i) one.add(std::vector<double>{0, 0, 0}, false);
    try {
      stratified_kfold(one, {2, 1});
      FAIL("expected TooFewMinoritySamples");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kTooFewMinoritySamples);
    }
    CHECK_THROWS_AS(stratified_kfold(ds, {1, 1}), Error);
  }
}

TEST_CASE("evaluate_with pools predictions") {
  const auto ds = labelled_rows();
  const Trainer perfect = [](const Dataset&) -> Predictor {
    return [](const Dataset& rows) {
      std::vector<bool> out;
      for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(rows.row(i)[0] > 0.5);
      return out;
    };
  };
  const auto m = evaluate_with(perfect, ds, {5, 42});
  CHECK(m.accuracy == 1.0);
  CHECK(m.confusion.total() == 100);

  const auto never = evaluate_with([](const Dataset&) { return constant(false); }, ds, {5, 42});
  CHECK(never.accuracy == 0.8);
  CHECK(never.recall == 0.0);
  CHECK(never.confusion == Confusion{0, 0, 20, 80});
}

TEST_CASE("evaluate is deterministic and parallel-safe") {
  const auto ds = gen_dataset({}, {}, 1.0, 20, 42).dataset;
  for (const char* name : {"knn", "nb", "tree", "svm"}) {
    CAPTURE(name);
    const auto seq = evaluate(default_config(name), ds, {5, 42}, 1);
    const auto par = evaluate(default_config(name), ds, {5, 42}, 5);
    CHECK(seq == par);
    CHECK(seq == evaluate(default_config(name), ds, {5, 42}, 3));
    CHECK(seq.confusion.total() == ds.size());
  }
}

TEST_CASE("fold training never sees test rows") {
  const auto ds = gen_dataset({}, {}, 1.0, 10, 4).dataset;
  const CvConfig cv{5, 42};
  const auto folds = stratified_kfold(ds, cv);
  const auto models = train_folds(KnnParams{5}, ds, cv);

  // Perturb one test row of fold 0; fold 0's scaler must not move.
  Dataset perturbed(ds.schema());
  const std::size_t victim = folds[0].test.front();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::vector<double> r(ds.row(i).begin(), ds.row(i).end());
    if (i == victim) r[1] += 25.0;
    perturbed.add(r, ds.target(i));
  }
  const auto again = train_folds(KnnParams{5}, perturbed, cv);
  CHECK(scaler_of(again[0]) == scaler_of(models[0]));
  bool some_other_moved = false;
  for (std::size_t f = 1; f < folds.size(); ++f) {
    some_other_moved |= !(scaler_of(again[f]) == scaler_of(models[f]));
  }
  CHECK(some_other_moved);
}

TEST_CASE("benchmark_all") {
  const auto ds = gen_dataset({}, {}, 1.0, 15, 42).dataset;
  const auto rows = benchmark_all(ds, {5, 42});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].algo == "knn");
  CHECK(rows[1].algo == "svm");
  CHECK(rows[2].algo == "nb");
  CHECK(rows[3].algo == "tree");
  CHECK(rows == benchmark_all(ds, {5, 42}, 4));

  const auto csv = metrics_csv(rows);
  CHECK(csv.rfind("algo,accuracy,precision,recall,f1,tp,fp,fn,tn\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  const auto json = nlohmann::json::parse(metrics_json(rows));
  REQUIRE(json.size() == 4);
  CHECK(json[0].at("tp").get<std::size_t>() == rows[0].metrics.confusion.tp);
  CHECK(json[2].at("accuracy").get<double>() == rows[2].metrics.accuracy);
}
