#pragma once

#include <cstdint>
#include <vector>

#include "entrance/features.hpp"
#include "entrance/reading.hpp"

namespace entrance {

// Mean-signal model of an approach walk. Defaults are pinned to the
// extremes of the reference field sample (SNR 33 -> 14 dB, 20 -> 4
// satellites, RSS rising towards an access point inside the building).
struct SignalModelParams {
  double rss_p1_dbm = -30.0;
  double rss_exponent = 2.2;
  double ap_distance_m = -6.0;
  double snr_out_db = 33.0;
  double snr_in_db = 14.0;
  double sats_out = 20.0;
  double sats_in = 4.0;
  double transition_w_m = 2.0;
  double noise_rss_db = 3.0;
  double noise_snr_db = 3.0;
  double noise_sats = 2.0;

  /// Throws kInvalidSpec.
  void validate() const;
  SignalModelParams noiseless() const;
};

struct TrajectorySpec {
  double start_m = 10.0;
  double end_m = -4.0;
  double step_m = 0.5;

  void validate() const;
  /// start, start - step, ... down to (and including, when on grid) end.
  std::vector<double> positions() const;
};

double logistic(double x);

double expected_rss(const SignalModelParams& params, double distance_m);
double expected_snr(const SignalModelParams& params, double distance_m);
/// Satellite mean before rounding.
double expected_sats_real(const SignalModelParams& params, double distance_m);
/// Rounded half away from zero.
int expected_sats(const SignalModelParams& params, double distance_m);

Trace gen_trace(const SignalModelParams& params, const TrajectorySpec& spec, double radius_m,
                std::uint64_t seed);

struct GeneratedData {
  std::vector<Trace> traces;
  Dataset dataset;  // raw features, entrance flag as target
};

/// Trace i uses derive_seed(seed, i). `threads` > 1 generates in parallel;
/// output does not depend on it.
GeneratedData gen_dataset(const SignalModelParams& params, const TrajectorySpec& spec,
                          double radius_m, std::size_t n_traces, std::uint64_t seed,
                          unsigned threads = 1);

}  // namespace entrance
