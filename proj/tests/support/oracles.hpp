#pragma once

// Brute-force reference implementations used to cross-check the library.
// They deliberately share no code with it: moments, distances and
// densities are recomputed here from the raw rows.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "entrance/features.hpp"
#include "entrance/tree.hpp"

namespace entrance::testing {

using Rows = std::vector<std::vector<double>>;

inline Rows rows_of(const Dataset& ds) {
  Rows out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto r = ds.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

inline std::vector<int> targets_of(const Dataset& ds) {
  std::vector<int> out;
  for (std::size_t i = 0; i < ds.size(); ++i) out.push_back(ds.target(i) ? 1 : 0);
  return out;
}

// Sort-all-distances kNN vote on standardized rows.
struct KnnOracle {
  Rows z;
  std::vector<int> y;
  std::vector<double> mean, sd;
  int k;

  KnnOracle(const Dataset& ds, int k_) : y(targets_of(ds)), k(k_) {
    const Rows x = rows_of(ds);
    const std::size_t d = ds.dims();
    mean.assign(d, 0.0);
    sd.assign(d, 0.0);
    for (const auto& r : x)
      for (std::size_t f = 0; f < d; ++f) mean[f] += r[f] / static_cast<double>(x.size());
    for (const auto& r : x)
      for (std::size_t f = 0; f < d; ++f)
        sd[f] += (r[f] - mean[f]) * (r[f] - mean[f]) / static_cast<double>(x.size());
    for (auto& s : sd) s = std::sqrt(s) < 1e-12 ? 1.0 : std::sqrt(s);
    for (const auto& r : x) z.push_back(standardize(r));
  }

  std::vector<double> standardize(const std::vector<double>& v) const {
    std::vector<double> out(v.size());
    for (std::size_t f = 0; f < v.size(); ++f) out[f] = (v[f] - mean[f]) / sd[f];
    return out;
  }

  std::pair<bool, int> predict(const std::vector<double>& v) const {
    const auto q = standardize(v);
    std::vector<std::pair<double, std::size_t>> dist;
    for (std::size_t i = 0; i < z.size(); ++i) {
      double s = 0.0;
      for (std::size_t f = 0; f < q.size(); ++f) s += std::pow(z[i][f] - q[f], 2);
      dist.emplace_back(std::sqrt(s), i);
    }
    std::sort(dist.begin(), dist.end());
    int yes = 0;
    for (int j = 0; j < k; ++j) yes += y[dist[j].second];
    return {2 * yes > k, yes};
  }
};

// Direct Gaussian log-density evaluation with its own class statistics.
struct NbOracle {
  double log_prior[2];
  std::vector<double> mean[2], var[2];

  explicit NbOracle(const Dataset& ds) {
    const Rows x = rows_of(ds);
    const auto y = targets_of(ds);
    const std::size_t d = ds.dims();
    const double n = static_cast<double>(x.size());
    std::vector<double> pooled_mean(d, 0.0), pooled_var(d, 0.0);
    for (const auto& r : x)
      for (std::size_t f = 0; f < d; ++f) pooled_mean[f] += r[f] / n;
    for (const auto& r : x)
      for (std::size_t f = 0; f < d; ++f) pooled_var[f] += std::pow(r[f] - pooled_mean[f], 2) / n;
    for (int c = 0; c < 2; ++c) {
      Rows members;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (y[i] == c) members.push_back(x[i]);
      const double m = static_cast<double>(members.size());
      log_prior[c] = std::log(m / n);
      mean[c].assign(d, 0.0);
      var[c].assign(d, 0.0);
      for (const auto& r : members)
        for (std::size_t f = 0; f < d; ++f) mean[c][f] += r[f] / m;
      for (const auto& r : members)
        for (std::size_t f = 0; f < d; ++f) var[c][f] += std::pow(r[f] - mean[c][f], 2) / m;
      for (std::size_t f = 0; f < d; ++f)
        var[c][f] = std::max({var[c][f], 0.01 * pooled_var[f], 1e-9});
    }
  }

  double log_posterior(int c, const std::vector<double>& v) const {
    double lp = log_prior[c];
    for (std::size_t f = 0; f < v.size(); ++f) {
      lp += -std::log(std::sqrt(2.0 * std::numbers::pi * var[c][f])) -
            (v[f] - mean[c][f]) * (v[f] - mean[c][f]) / (2.0 * var[c][f]);
    }
    return lp;
  }

  bool predict(const std::vector<double>& v) const {
    return log_posterior(1, v) > log_posterior(0, v);
  }
};

// Replays extracted rules: entrance iff some rule's literals all hold,
// otherwise the non-entrance complement.
inline bool replay_rules(const std::vector<Rule>& rules, const std::vector<double>& v) {
  for (const auto& rule : rules) {
    bool all = true;
    for (const auto& c : rule.conditions) {
      const double x = v[c.feature];
      if (c.less_equal ? !(x <= c.threshold) : !(x > c.threshold)) all = false;
    }
    if (all) return true;
  }
  return false;
}

struct BestSplit {
  bool found = false;
  std::size_t feature = 0;
  double threshold = 0.0;
  double decrease = 0.0;
};

// Exhaustive root split: every feature, every midpoint of consecutive
// distinct values, Gini decrease in floating point.
inline BestSplit best_root_split(const Dataset& ds, std::size_t min_leaf = 1) {
  const Rows x = rows_of(ds);
  const auto y = targets_of(ds);
  auto gini = [](double pos, double n) {
    if (n == 0) return 0.0;
    const double p = pos / n;
    return 1.0 - p * p - (1.0 - p) * (1.0 - p);
  };
  const double n = static_cast<double>(x.size());
  double total_pos = 0;
  for (int t : y) total_pos += t;
  const double parent = gini(total_pos, n);
  BestSplit best;
  for (std::size_t f = 0; f < ds.dims(); ++f) {
    std::vector<double> vals;
    for (const auto& r : x) vals.push_back(r[f]);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (std::size_t j = 0; j + 1 < vals.size(); ++j) {
      const double t = (vals[j] + vals[j + 1]) / 2.0;
      double nl = 0, pl = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i][f] <= t) {
          ++nl;
          pl += y[i];
        }
      }
      const double nr = n - nl, pr = total_pos - pl;
      if (nl < static_cast<double>(min_leaf) || nr < static_cast<double>(min_leaf)) continue;
      const double dec = parent - (nl * gini(pl, nl) + nr * gini(pr, nr)) / n;
      if (dec > 1e-12 && (!best.found || dec > best.decrease + 1e-12)) {
        best = {true, f, t, dec};
      }
    }
  }
  return best;
}

// Uniform queries over a box around typical readings.
inline std::vector<std::vector<double>> random_queries(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> sats(0.0, 25.0), snr(10.0, 40.0), rss(-75.0, -25.0);
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back({sats(gen), snr(gen), rss(gen)});
  return out;
}

}  // namespace entrance::testing
