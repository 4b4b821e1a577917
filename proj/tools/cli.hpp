#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "entrance/reading.hpp"

namespace entrance::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one subcommand. Results go to `out` (or the --out file),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct DistanceAggregate {
  double distance_m = 0.0;
  double mean_sats = 0.0;
  double mean_snr = 0.0;
  double mean_rss = 0.0;
  std::size_t n = 0;
};

/// Per-distance means, ordered from the farthest outside reading inwards.
std::vector<DistanceAggregate> aggregate_by_distance(const std::vector<SensorReading>& readings);
std::string aggregates_csv(const std::vector<DistanceAggregate>& rows);

}  // namespace entrance::cli
