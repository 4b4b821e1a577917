#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <limits>

#include "entrance/error.hpp"
#include "entrance/estimator.hpp"
#include "entrance/random.hpp"
#include "entrance/synthetic.hpp"
#include "reference_sample.hpp"

using namespace entrance;
using namespace entrance::testing;

namespace {

std::vector<bool> bools(std::initializer_list<int> xs) {
  std::vector<bool> out;
  for (int x : xs) out.push_back(x != 0);
  return out;
}

Trace grid_trace(std::size_t n, double start = 10.0, double step = 0.5) {
  std::vector<SensorReading> rs;
  for (std::size_t i = 0; i < n; ++i) {
    SensorReading r;
    r.num_satellites = 10;
    r.snr_db = 20;
    r.rss_dbm = -50;
    r.distance_m = start - step * static_cast<double>(i);
    rs.push_back(r);
  }
  return Trace("grid", rs);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kEmptyDataset;
}

}  // namespace

TEST_CASE("smooth") {
  CHECK(smooth(bools({0, 1, 0, 0}), 3) == bools({0, 0, 0, 0}));
  CHECK(smooth(bools({1, 1, 0, 1, 1}), 3) == bools({1, 1, 1, 1, 1}));
  CHECK(smooth(bools({1, 0}), 3) == bools({0, 0}));
  CHECK(smooth(bools({0, 1, 1, 1, 0}), 5) == bools({1, 1, 1, 1, 1}));
  CHECK(smooth({}, 3).empty());
  const auto x = bools({1, 0, 1, 1, 0, 0, 1});
  CHECK(smooth(x, 1) == x);
  CHECK(code_of([] { smooth(bools({1}), 0); }) == ErrorCode::kBadWindow);
  CHECK(code_of([] { smooth(bools({1}), 2); }) == ErrorCode::kBadWindow);
}

TEST_CASE("smoothing properties on random sequences") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(40);
    std::vector<bool> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rng.uniform() < 0.4;
    for (std::size_t w : {1, 3, 5, 7}) {
      const auto y = smooth(x, w);
      REQUIRE(y.size() == n);
      // A positive output needs a strict majority of positives around it.
      for (std::size_t i = 0; i < n; ++i) {
        if (!y[i]) continue;
        const std::size_t lo = i >= w / 2 ? i - w / 2 : 0;
        const std::size_t hi = std::min(n, i + w / 2 + 1);
        std::size_t pos = 0;
        for (std::size_t j = lo; j < hi; ++j) pos += x[j];
        CHECK(2 * pos > hi - lo);
      }
      // All-false and all-true are fixed points.
      CHECK(smooth(std::vector<bool>(n, false), w) == std::vector<bool>(n, false));
      CHECK(smooth(std::vector<bool>(n, true), w) == std::vector<bool>(n, true));
    }
  }
}

TEST_CASE("estimate_from_predictions") {
  SUBCASE("ground-truth labels on the default grid land on the entrance") {
    const auto trace = gen_trace(SignalModelParams{}.noiseless(), {}, 1.0, 1);
    std::vector<bool> truth;
    for (const auto& r : trace.readings()) truth.push_back(r.entrance);
    const auto result = estimate_from_predictions(trace, smooth(truth, 3));
    CHECK(result.estimated_position_m == 0.0);
    CHECK(result.position_error_m == 0.0);
    CHECK(result.positives.size() == 5);
    CHECK(result.trace_id == trace.id());
  }
  SUBCASE("longest run wins, earliest on ties, lower middle for even runs") {
    const auto trace = grid_trace(12);
    auto r = estimate_from_predictions(trace, bools({1, 1, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0}));
    CHECK(r.estimated_index == 5);
    r = estimate_from_predictions(trace, bools({0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0}));
    CHECK(r.estimated_index == 1);
    CHECK(r.estimated_position_m == 9.5);
    CHECK(r.position_error_m == 9.5);
    CHECK(r.positives == std::vector<std::size_t>{1, 2, 6, 7});
    r = estimate_from_predictions(trace, bools({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(r.estimated_index == 11);
    CHECK(r.estimated_position_m == 4.5);
  }
  SUBCASE("errors") {
    const auto trace = grid_trace(4);
    CHECK(code_of([&] { estimate_from_predictions(trace, bools({0, 0, 0, 0})); }) ==
          ErrorCode::kNoEntranceDetected);
    CHECK(code_of([&] { estimate_from_predictions(trace, bools({1, 0})); }) ==
          ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("estimate_entrance with trained models") {
  SUBCASE("a zero-margin linear model detects nothing") {
    SvmModel svm;
    svm.scaler = Scaler::identity(3);
    svm.weights = {0.0, 0.0, 0.0};
    svm.bias = 0.0;
    const auto trace = gen_trace({}, {}, 1.0, 3);
    CHECK(classify_trace(TrainedModel{svm}, trace) == std::vector<bool>(trace.size(), false));
    CHECK(code_of([&] { estimate_entrance(TrainedModel{svm}, trace); }) ==
          ErrorCode::kNoEntranceDetected);
  }
  SUBCASE("depth-3 tree on the reference sample") {
    const auto model = train(TreeParams{3, 1}, reference_dataset());
    const Trace trace("reference", reference_readings());
    CHECK(classify_trace(model, trace) == bools({0, 0, 0, 0, 1, 0, 0}));
    const auto result = estimate_entrance(model, trace, 1);
    CHECK(result.estimated_index == 4);
    CHECK(result.position_error_m == 0.0);
    // A single positive is voted away by a window of three.
    CHECK(code_of([&] { estimate_entrance(model, trace, 3); }) == ErrorCode::kNoEntranceDetected);
  }
  SUBCASE("windowed models are rejected") {
    const auto gen = gen_dataset({}, {}, 1.0, 3, 5);
    const auto model = train(KnnParams{3}, dataset_from_traces(gen.traces, FeatureSchema::kWindowed6));
    CHECK(code_of([&] { classify_trace(model, gen.traces[0]); }) == ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("reporting") {
  DetectionResult r{"walk-1", 3, 0.5, 0.5, {2, 3, 4}};
  const auto doc = nlohmann::json::parse(detection_json(r));
  CHECK(doc.at("trace") == "walk-1");
  CHECK(doc.at("estimated_index") == 3);
  CHECK(doc.at("position_error_m") == 0.5);
  CHECK(doc.at("positives").size() == 3);
  CHECK(nlohmann::json::parse(detection_json(std::vector{r, r})).size() == 2);
  CHECK(detection_summary(r) ==
        "walk-1: entrance at d=0.5 m (reading 3), error 0.5 m, 3 positive readings");
}

TEST_CASE("error summary") {
  CHECK(percentile({3.0, 1.0, 2.0}, 0.5) == 2.0);
  CHECK(percentile({0.0, 10.0}, 0.9) == 9.0);
  CHECK(percentile({1.0, 2.0, 3.0, 4.0}, 0.5) == 2.5);
  CHECK(std::isnan(percentile({}, 0.5)));

  const double inf = std::numeric_limits<double>::infinity();
  const auto s = summarize_errors({0.0, 0.5, 1.0, inf});
  CHECK(s.traces == 4);
  CHECK(s.undetected == 1);
  CHECK(s.mean == 0.5);
  CHECK(s.median == 0.75);
  CHECK(std::isinf(s.p90));
  CHECK(std::isinf(s.max));

  const auto clean = summarize_errors({0.0, 0.0, 0.5, 0.5, 1.0, 1.0, 1.0, 1.5, 2.0, 3.0});
  CHECK(clean.median == 1.0);
  CHECK(clean.p90 == doctest::Approx(2.1));
  CHECK(clean.max == 3.0);
}
