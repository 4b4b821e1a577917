#include "entrance/model_io.hpp"

#include <initializer_list>
#include <set>

#include <json.hpp>

#include "entrance/error.hpp"

namespace entrance {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, what);
}

void expect_keys(const json& obj, std::initializer_list<std::string_view> keys,
                 std::string_view where) {
  if (!obj.is_object()) malformed(std::string(where) + " must be an object");
  const std::set<std::string_view> allowed(keys);
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) malformed("unknown field '" + key + "' in " + std::string(where));
  }
  for (auto key : keys) {
    if (!obj.contains(key)) malformed("missing field '" + std::string(key) + "' in " + std::string(where));
  }
}

json scaler_json(const Scaler& s) { return {{"means", s.means}, {"stds", s.stds}}; }

Scaler scaler_from(const json& j) {
  expect_keys(j, {"means", "stds"}, "scaler");
  Scaler s{j.at("means").get<std::vector<double>>(), j.at("stds").get<std::vector<double>>()};
  if (s.means.empty() || s.means.size() != s.stds.size()) malformed("scaler widths disagree");
  for (double sd : s.stds) {
    if (!(sd > 0.0)) malformed("scaler std must be > 0");
  }
  return s;
}

json to_json(const KnnModel& m) {
  json rows = json::array();
  json targets = json::array();
  for (std::size_t i = 0; i < m.stored().size(); ++i) {
    const auto r = m.stored().row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
    targets.push_back(m.stored().target(i));
  }
  return {{"k", m.k()}, {"rows", rows}, {"targets", targets}};
}

json to_json(const NaiveBayesModel& m) {
  json classes = json::array();
  for (const auto& c : m.classes()) {
    classes.push_back({{"log_prior", c.log_prior}, {"means", c.means}, {"variances", c.variances}});
  }
  return {{"classes", classes}};
}

json to_json(const TreeModel& m) {
  json nodes = json::array();
  for (const auto& n : m.nodes) {
    if (n.is_leaf()) {
      nodes.push_back({{"counts", n.counts}});
    } else {
      nodes.push_back({{"feature", n.feature},
                       {"threshold", n.threshold},
                       {"left", n.left},
                       {"right", n.right},
                       {"counts", n.counts}});
    }
  }
  return {{"max_depth", m.max_depth}, {"min_samples_leaf", m.min_samples_leaf}, {"nodes", nodes}};
}

json to_json(const SvmModel& m) {
  return {{"weights", m.weights},
          {"bias", m.bias},
          {"lambda", m.lambda},
          {"epochs", m.epochs},
          {"seed", m.seed}};
}

KnnModel knn_from(const json& j, Scaler scaler) {
  expect_keys(j, {"format_version", "algo", "scaler", "k", "rows", "targets"}, "knn model");
  const auto& rows = j.at("rows");
  const auto& targets = j.at("targets");
  if (!rows.is_array() || !targets.is_array() || rows.size() != targets.size()) {
    malformed("knn rows and targets must be arrays of equal length");
  }
  Dataset stored(schema_for_dimension(scaler.dims()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    stored.add(rows[i].get<std::vector<double>>(), targets[i].get<bool>());
  }
  return KnnModel(j.at("k").get<int>(), std::move(scaler), std::move(stored));
}

NaiveBayesModel nb_from(const json& j, Scaler scaler) {
  expect_keys(j, {"format_version", "algo", "scaler", "classes"}, "nb model");
  const auto& classes = j.at("classes");
  if (!classes.is_array() || classes.size() != 2) malformed("nb needs exactly two classes");
  std::array<GaussianClassStats, 2> stats;
  for (std::size_t c = 0; c < 2; ++c) {
    expect_keys(classes[c], {"log_prior", "means", "variances"}, "nb class");
    stats[c].log_prior = classes[c].at("log_prior").get<double>();
    stats[c].means = classes[c].at("means").get<std::vector<double>>();
    stats[c].variances = classes[c].at("variances").get<std::vector<double>>();
  }
  if (stats[0].means.size() != scaler.dims()) malformed("nb width disagrees with scaler");
  return NaiveBayesModel(std::move(scaler), std::move(stats));
}

TreeModel tree_from(const json& j, Scaler scaler) {
  expect_keys(j, {"format_version", "algo", "scaler", "max_depth", "min_samples_leaf", "nodes"},
              "tree model");
  TreeModel m;
  m.dims = scaler.dims();
  m.scaler = std::move(scaler);
  m.max_depth = j.at("max_depth").get<int>();
  m.min_samples_leaf = j.at("min_samples_leaf").get<int>();
  const auto& nodes = j.at("nodes");
  if (!nodes.is_array()) malformed("tree nodes must be an array");
  for (const auto& jn : nodes) {
    TreeNode n;
    if (jn.is_object() && jn.size() == 1) {
      expect_keys(jn, {"counts"}, "tree leaf");
    } else {
      expect_keys(jn, {"feature", "threshold", "left", "right", "counts"}, "tree node");
      n.feature = jn.at("feature").get<int>();
      n.threshold = jn.at("threshold").get<double>();
      n.left = jn.at("left").get<int>();
      n.right = jn.at("right").get<int>();
      if (n.feature < 0) malformed("split feature must be >= 0");
    }
    n.counts = jn.at("counts").get<std::array<std::size_t, 2>>();
    m.nodes.push_back(n);
  }
  m.validate();
  return m;
}

SvmModel svm_from(const json& j, Scaler scaler) {
  expect_keys(j, {"format_version", "algo", "scaler", "weights", "bias", "lambda", "epochs", "seed"},
              "svm model");
  SvmModel m;
  m.scaler = std::move(scaler);
  m.weights = j.at("weights").get<std::vector<double>>();
  m.bias = j.at("bias").get<double>();
  m.lambda = j.at("lambda").get<double>();
  m.epochs = j.at("epochs").get<int>();
  m.seed = j.at("seed").get<std::uint64_t>();
  if (m.weights.size() != m.scaler.dims()) malformed("svm width disagrees with scaler");
  for (double w : m.weights) {
    if (!std::isfinite(w)) malformed("svm weights must be finite");
  }
  if (!std::isfinite(m.bias)) malformed("svm bias must be finite");
  return m;
}

}  // namespace

std::string save_model(const TrainedModel& model) {
  json doc = std::visit([](const auto& m) { return to_json(m); }, model);
  doc["format_version"] = kModelFormatVersion;
  doc["algo"] = algo_name(model);
  doc["scaler"] = scaler_json(scaler_of(model));
  return doc.dump(1) + "\n";
}

TrainedModel load_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("model document must be an object");
  if (!doc.contains("format_version")) malformed("missing field 'format_version'");
  if (!doc.contains("algo") || !doc.at("algo").is_string()) malformed("missing field 'algo'");
  if (!doc.at("format_version").is_number_integer()) malformed("format_version must be an integer");
  if (doc.at("format_version").get<long long>() != kModelFormatVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "format_version " + doc.at("format_version").dump() + ", expected " +
                    std::to_string(kModelFormatVersion));
  }
  const auto algo = doc.at("algo").get<std::string>();
  if (algo != "knn" && algo != "nb" && algo != "tree" && algo != "svm") {
    throw Error(ErrorCode::kUnknownAlgo, "unknown algorithm '" + algo + "'");
  }
  try {
    if (!doc.contains("scaler")) malformed("missing field 'scaler'");
    Scaler scaler = scaler_from(doc.at("scaler"));
    schema_for_dimension(scaler.dims());
    if (algo == "knn") return knn_from(doc, std::move(scaler));
    if (algo == "nb") return nb_from(doc, std::move(scaler));
    if (algo == "tree") return tree_from(doc, std::move(scaler));
    return svm_from(doc, std::move(scaler));
  } catch (const json::exception& e) {
    malformed(std::string("bad field type: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedDocument) throw;
    malformed(e.what());
  }
}

}  // namespace entrance
