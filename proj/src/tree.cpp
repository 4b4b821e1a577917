#include "entrance/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entrance/csv.hpp"
#include "entrance/error.hpp"

namespace entrance {

namespace {

using Wide = __int128;

// Weighted purity of a split, sum_c cL^2 / nL + sum_c cR^2 / nR, kept as an
// exact fraction so that equal-quality splits compare equal.
struct SplitScore {
  Wide num = 0;
  Wide den = 1;

  bool better_than(const SplitScore& o) const { return num * o.den > o.num * den; }
};

SplitScore score(const std::array<std::size_t, 2>& left, const std::array<std::size_t, 2>& right) {
  const Wide nl = static_cast<Wide>(left[0] + left[1]);
  const Wide nr = static_cast<Wide>(right[0] + right[1]);
  const Wide ql = static_cast<Wide>(left[0]) * left[0] + static_cast<Wide>(left[1]) * left[1];
  const Wide qr = static_cast<Wide>(right[0]) * right[0] + static_cast<Wide>(right[1]) * right[1];
  return {ql * nr + qr * nl, nl * nr};
}

class Builder {
 public:
  Builder(const Dataset& data, int max_depth, int min_leaf, std::vector<TreeNode>& nodes)
      : data_(data), max_depth_(max_depth), min_leaf_(static_cast<std::size_t>(min_leaf)),
        nodes_(nodes) {}

  int build(std::vector<std::size_t> rows, int depth) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    std::array<std::size_t, 2> counts{};
    for (auto i : rows) ++counts[data_.target(i) ? 1 : 0];
    nodes_[id].counts = counts;

    if (counts[0] == 0 || counts[1] == 0 || depth >= max_depth_ || rows.size() < 2 * min_leaf_) {
      return id;
    }

    const std::size_t n = rows.size();
    const Wide parent_q =
        static_cast<Wide>(counts[0]) * counts[0] + static_cast<Wide>(counts[1]) * counts[1];
    // Parent purity as a fraction over n; a split must beat it strictly.
    SplitScore best{parent_q, static_cast<Wide>(n)};
    int best_feature = -1;
    double best_threshold = 0.0;

    std::vector<std::size_t> sorted = rows;
    for (std::size_t f = 0; f < data_.dims(); ++f) {
      std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
        return data_.row(a)[f] < data_.row(b)[f];
      });
      std::array<std::size_t, 2> left{};
      for (std::size_t j = 0; j + 1 < n; ++j) {
        ++left[data_.target(sorted[j]) ? 1 : 0];
        const double lo = data_.row(sorted[j])[f];
        const double hi = data_.row(sorted[j + 1])[f];
        if (!(lo < hi)) continue;
        const std::size_t nl = j + 1;
        if (nl < min_leaf_ || n - nl < min_leaf_) continue;
        const std::array<std::size_t, 2> right = {counts[0] - left[0], counts[1] - left[1]};
        const SplitScore s = score(left, right);
        if (s.better_than(best)) {
          best = s;
          best_feature = static_cast<int>(f);
          double mid = (lo + hi) / 2.0;
          if (!(mid < hi)) mid = lo;
          best_threshold = mid;
        }
      }
    }
    if (best_feature < 0) return id;

    std::vector<std::size_t> left_rows;
    std::vector<std::size_t> right_rows;
    for (auto i : rows) {
      (data_.row(i)[best_feature] <= best_threshold ? left_rows : right_rows).push_back(i);
    }
    rows.clear();
    rows.shrink_to_fit();
    const int l = build(std::move(left_rows), depth + 1);
    const int r = build(std::move(right_rows), depth + 1);
    nodes_[id].feature = best_feature;
    nodes_[id].threshold = best_threshold;
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
  }

 private:
  const Dataset& data_;
  int max_depth_;
  std::size_t min_leaf_;
  std::vector<TreeNode>& nodes_;
};

int depth_of(const std::vector<TreeNode>& nodes, int id) {
  const auto& n = nodes[id];
  if (n.is_leaf()) return 0;
  return 1 + std::max(depth_of(nodes, n.left), depth_of(nodes, n.right));
}

}  // namespace

int TreeModel::depth() const { return nodes.empty() ? 0 : depth_of(nodes, 0); }

void TreeModel::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kMalformedDocument, what); };
  if (nodes.empty()) fail("tree has no nodes");
  if (dims == 0 || scaler.dims() != dims) fail("tree width disagrees with its scaler");
  if (max_depth < 1 || min_samples_leaf < 1) fail("tree hyperparameters out of range");
  const int n = static_cast<int>(nodes.size());
  // Children must come after their parent and be referenced once, which
  // rules out cycles and sharing.
  std::vector<int> refs(nodes.size(), 0);
  for (int i = 0; i < n; ++i) {
    const auto& node = nodes[i];
    if (node.counts[0] + node.counts[1] == 0) fail("node with no training rows");
    if (node.is_leaf()) continue;
    if (node.feature < 0 || static_cast<std::size_t>(node.feature) >= dims) fail("bad feature");
    if (!std::isfinite(node.threshold)) fail("non-finite threshold");
    for (int child : {node.left, node.right}) {
      if (child <= i || child >= n) fail("bad child link");
      ++refs[child];
    }
  }
  for (int i = 1; i < n; ++i) {
    if (refs[i] != 1) fail("node not reachable exactly once");
  }
  if (depth() > max_depth) fail("tree deeper than max_depth");
}

TreeModel train_tree(const Dataset& dataset, int max_depth, int min_samples_leaf) {
  if (dataset.empty()) throw Error(ErrorCode::kEmptyDataset, "tree needs at least one row");
  if (max_depth < 1 || min_samples_leaf < 1) {
    throw Error(ErrorCode::kBadHyperparameter, "max_depth and min_samples_leaf must be >= 1");
  }
  TreeModel model;
  model.scaler = fit_scaler(dataset);
  model.dims = dataset.dims();
  model.max_depth = max_depth;
  model.min_samples_leaf = min_samples_leaf;
  std::vector<std::size_t> rows(dataset.size());
  std::iota(rows.begin(), rows.end(), 0);
  Builder(dataset, max_depth, min_samples_leaf, model.nodes).build(std::move(rows), 0);
  return model;
}

std::size_t tree_leaf(const TreeModel& model, std::span<const double> v) {
  if (v.size() != model.dims) {
    throw Error(ErrorCode::kDimensionMismatch, "query width differs from model");
  }
  std::size_t id = 0;
  while (!model.nodes[id].is_leaf()) {
    const auto& node = model.nodes[id];
    id = static_cast<std::size_t>(v[node.feature] <= node.threshold ? node.left : node.right);
  }
  return id;
}

bool predict_tree(const TreeModel& model, std::span<const double> v) {
  return model.nodes[tree_leaf(model, v)].majority();
}

bool Rule::matches(std::span<const double> v) const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const RuleCondition& c) { return c.holds(v); });
}

std::vector<Rule> extract_rules(const TreeModel& model) {
  std::vector<Rule> rules;
  std::vector<RuleCondition> path;
  auto walk = [&](auto&& self, std::size_t id) -> void {
    const auto& node = model.nodes[id];
    if (node.is_leaf()) {
      if (node.majority()) rules.push_back({path, id});
      return;
    }
    const auto f = static_cast<std::size_t>(node.feature);
    path.push_back({f, true, node.threshold});
    self(self, static_cast<std::size_t>(node.left));
    path.back().less_equal = false;
    self(self, static_cast<std::size_t>(node.right));
    path.pop_back();
  };
  walk(walk, 0);
  return rules;
}

std::string render_rule(const Rule& rule, FeatureSchema schema) {
  const auto names = feature_names(schema);
  std::string out = "if ";
  if (rule.conditions.empty()) out += "true";
  for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
    const auto& c = rule.conditions[i];
    if (i > 0) out += " and ";
    out += names[c.feature];
    out += c.less_equal ? " <= " : " > ";
    out += format_double(c.threshold);
  }
  out += " then entrance";
  return out;
}

}  // namespace entrance
