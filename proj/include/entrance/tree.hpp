#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "entrance/features.hpp"
#include "entrance/scaler.hpp"

namespace entrance {

inline constexpr int kDefaultMaxDepth = 4;
inline constexpr int kDefaultMinSamplesLeaf = 1;

struct TreeNode {
  static constexpr int kLeaf = -1;

  int feature = kLeaf;  // kLeaf for leaves
  double threshold = 0.0;
  int left = -1;   // taken when value <= threshold
  int right = -1;
  std::array<std::size_t, 2> counts{};  // training rows reaching the node: [no, yes]

  bool is_leaf() const noexcept { return feature == kLeaf; }
  /// Majority of counts; a tie is non-entrance.
  bool majority() const noexcept { return counts[1] > counts[0]; }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// CART classification tree on raw features. nodes[0] is the root.
struct TreeModel {
  Scaler scaler;  // fitted on the training rows; not used for prediction
  std::size_t dims = 0;
  int max_depth = kDefaultMaxDepth;
  int min_samples_leaf = kDefaultMinSamplesLeaf;
  std::vector<TreeNode> nodes;

  int depth() const;
  /// Throws kMalformedDocument when links, thresholds, or counts are invalid.
  void validate() const;

  friend bool operator==(const TreeModel&, const TreeModel&) = default;
};

/// Gini impurity splits at midpoints between consecutive distinct values.
/// Best split maximizes the impurity decrease; ties go to the lower feature
/// index, then the lower threshold. A node becomes a leaf when pure, at
/// max_depth, or when no split keeps min_samples_leaf rows on both sides
/// with a strictly positive decrease.
TreeModel train_tree(const Dataset& dataset, int max_depth = kDefaultMaxDepth,
                     int min_samples_leaf = kDefaultMinSamplesLeaf);

bool predict_tree(const TreeModel& model, std::span<const double> v);
/// Index of the leaf reached by v.
std::size_t tree_leaf(const TreeModel& model, std::span<const double> v);

struct RuleCondition {
  std::size_t feature = 0;
  bool less_equal = true;  // value <= threshold, otherwise value > threshold
  double threshold = 0.0;

  bool holds(std::span<const double> v) const {
    return less_equal ? v[feature] <= threshold : v[feature] > threshold;
  }
};

// Conjunction of root-to-leaf conditions for one entrance leaf.
struct Rule {
  std::vector<RuleCondition> conditions;
  std::size_t leaf = 0;

  bool matches(std::span<const double> v) const;
};

/// One rule per leaf whose majority is entrance, in left-to-right leaf order.
std::vector<Rule> extract_rules(const TreeModel& model);

/// "if num_satellites <= 9.5 and snr_db > 18 then entrance"
std::string render_rule(const Rule& rule, FeatureSchema schema);

}  // namespace entrance
