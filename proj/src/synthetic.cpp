#include "entrance/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "entrance/error.hpp"
#include "entrance/random.hpp"

namespace entrance {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidSpec, what);
}

}  // namespace

void SignalModelParams::validate() const {
  require(std::isfinite(rss_p1_dbm), "rss_p1_dbm must be finite");
  require(snr_out_db > snr_in_db && snr_in_db >= 0.0, "need snr_out > snr_in >= 0");
  require(sats_out > sats_in && sats_in >= 0.0, "need sats_out > sats_in >= 0");
  require(rss_exponent > 0.0, "rss_exponent must be > 0");
  require(transition_w_m > 0.0, "transition_w_m must be > 0");
  require(noise_rss_db >= 0.0 && noise_snr_db >= 0.0 && noise_sats >= 0.0,
          "noise stds must be >= 0");
  require(ap_distance_m < 0.0, "access point must be inside (ap_distance_m < 0)");
}

SignalModelParams SignalModelParams::noiseless() const {
  auto p = *this;
  p.noise_rss_db = p.noise_snr_db = p.noise_sats = 0.0;
  return p;
}

void TrajectorySpec::validate() const {
  require(std::isfinite(start_m) && std::isfinite(end_m), "trajectory bounds must be finite");
  require(start_m > end_m, "start_m must exceed end_m");
  require(step_m > 0.0, "step_m must be > 0");
}

std::vector<double> TrajectorySpec::positions() const {
  validate();
  const auto count = static_cast<std::size_t>(std::floor((start_m - end_m) / step_m + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start_m - static_cast<double>(i) * step_m;
  return out;
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double expected_rss(const SignalModelParams& p, double d) {
  const double r = std::max(std::abs(d - p.ap_distance_m), 1.0);
  return p.rss_p1_dbm - 10.0 * p.rss_exponent * std::log10(r);
}

double expected_snr(const SignalModelParams& p, double d) {
  return p.snr_in_db + (p.snr_out_db - p.snr_in_db) * logistic(d / p.transition_w_m);
}

double expected_sats_real(const SignalModelParams& p, double d) {
  return p.sats_in + (p.sats_out - p.sats_in) * logistic(d / p.transition_w_m);
}

int expected_sats(const SignalModelParams& p, double d) {
  return static_cast<int>(std::round(expected_sats_real(p, d)));
}

// Per reading the stream is consumed in the order snr, rss, satellites.
Trace gen_trace(const SignalModelParams& params, const TrajectorySpec& spec, double radius_m,
                std::uint64_t seed) {
  params.validate();
  if (!(radius_m > 0.0)) throw Error(ErrorCode::kInvalidSpec, "radius must be > 0");
  Rng rng(seed);
  std::vector<SensorReading> readings;
  for (double d : spec.positions()) {
    SensorReading r;
    r.distance_m = d;
    r.snr_db = std::clamp(expected_snr(params, d) + params.noise_snr_db * rng.normal(), kMinSnrDb,
                          kMaxSnrDb);
    r.rss_dbm = std::clamp(expected_rss(params, d) + params.noise_rss_db * rng.normal(),
                           kMinRssDbm, kMaxRssDbm);
    const double sats = expected_sats_real(params, d) + params.noise_sats * rng.normal();
    r.num_satellites = std::max(0, static_cast<int>(std::round(sats)));
    const Label label = label_from_distance(d, radius_m);
    r.entrance = label == Label::kEntrance;
    r.note = label;
    readings.push_back(r);
  }
  return Trace("seed-" + std::to_string(seed), std::move(readings));
}

GeneratedData gen_dataset(const SignalModelParams& params, const TrajectorySpec& spec,
                          double radius_m, std::size_t n_traces, std::uint64_t seed,
                          unsigned threads) {
  if (n_traces < 1) throw Error(ErrorCode::kInvalidSpec, "n_traces must be >= 1");
  params.validate();
  spec.validate();

  std::vector<std::optional<Trace>> slots(n_traces);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < n_traces; i += stride) {
      slots[i] = gen_trace(params, spec, radius_m, derive_seed(seed, i));
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, n_traces);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
  }

  GeneratedData out;
  out.traces.reserve(n_traces);
  for (std::size_t i = 0; i < n_traces; ++i) {
    out.traces.push_back(std::move(*slots[i]));
  }
  out.dataset = dataset_from_traces(out.traces, FeatureSchema::kRaw3);
  return out;
}

}  // namespace entrance
