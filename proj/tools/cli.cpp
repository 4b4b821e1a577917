#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "entrance/csv.hpp"
#include "entrance/error.hpp"
#include "entrance/estimator.hpp"
#include "entrance/evaluation.hpp"
#include "entrance/model_io.hpp"
#include "entrance/synthetic.hpp"

namespace entrance::cli {

namespace {

// Error codes that mean a flag broke a module precondition.
bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadK:
    case ErrorCode::kBadHyperparameter:
    case ErrorCode::kBadWindow:
    case ErrorCode::kInvalidSpec:
    case ErrorCode::kNonpositiveRadius:
    case ErrorCode::kUnknownAlgo:
      return true;
    default:
      return false;
  }
}

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << text;
  if (!f) throw IoError("failed writing '" + path + "'");
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct HyperFlags {
  int k = kDefaultK;
  int max_depth = kDefaultMaxDepth;
  int min_leaf = kDefaultMinSamplesLeaf;
  double lambda = kDefaultSvmLambda;
  int epochs = kDefaultSvmEpochs;
};

void add_hyper_flags(CLI::App* cmd, HyperFlags& h) {
  cmd->add_option("--k", h.k, "neighbours for knn (odd)")->capture_default_str();
  cmd->add_option("--max-depth", h.max_depth, "tree depth limit")->capture_default_str();
  cmd->add_option("--min-leaf", h.min_leaf, "minimum rows per tree leaf")->capture_default_str();
  cmd->add_option("--lambda", h.lambda, "svm regularization")->capture_default_str();
  cmd->add_option("--epochs", h.epochs, "svm passes over the data")->capture_default_str();
}

AlgoConfig make_config(const std::string& algo, const HyperFlags& h, std::uint64_t seed) {
  if (algo == "knn") {
    if (h.k < 1 || h.k % 2 == 0) throw Error(ErrorCode::kBadK, "--k must be odd and >= 1");
    return KnnParams{h.k};
  }
  if (algo == "nb") return NbParams{};
  if (algo == "tree") {
    if (h.max_depth < 1 || h.min_leaf < 1) {
      throw Error(ErrorCode::kBadHyperparameter, "--max-depth and --min-leaf must be >= 1");
    }
    return TreeParams{h.max_depth, h.min_leaf};
  }
  if (h.lambda <= 0.0 || h.epochs < 1) {
    throw Error(ErrorCode::kBadHyperparameter, "--lambda must be > 0 and --epochs >= 1");
  }
  return SvmParams{h.lambda, h.epochs, seed};
}

std::vector<SensorReading> read_readings(const std::string& path) {
  return parse_csv(read_file(path));
}

}  // namespace

std::vector<DistanceAggregate> aggregate_by_distance(const std::vector<SensorReading>& readings) {
  std::map<double, DistanceAggregate, std::greater<>> groups;
  for (const auto& r : readings) {
    auto& g = groups[r.distance_m];
    g.distance_m = r.distance_m;
    g.mean_sats += r.num_satellites;
    g.mean_snr += r.snr_db;
    g.mean_rss += r.rss_dbm;
    ++g.n;
  }
  std::vector<DistanceAggregate> out;
  for (auto& [_, g] : groups) {
    const auto n = static_cast<double>(g.n);
    g.mean_sats /= n;
    g.mean_snr /= n;
    g.mean_rss /= n;
    out.push_back(g);
  }
  return out;
}

std::string aggregates_csv(const std::vector<DistanceAggregate>& rows) {
  std::string out = "distance_m,mean_sats,mean_snr,mean_rss,n\n";
  for (const auto& r : rows) {
    out += format_double(r.distance_m) + ',' + format_double(r.mean_sats) + ',' +
           format_double(r.mean_snr) + ',' + format_double(r.mean_rss) + ',' +
           std::to_string(r.n) + '\n';
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Building-entrance detection from GPS and Wi-Fi signal traces", "entrance"};
  app.require_subcommand(1, 1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate synthetic approach-walk traces as CSV");
  std::size_t n_traces = 100;
  std::uint64_t seed = 42;
  TrajectorySpec traj;
  SignalModelParams params;
  double radius = kDefaultEntranceRadius;
  std::string out_path;
  gen->add_option("--traces", n_traces, "number of walks")->capture_default_str();
  gen->add_option("--seed", seed, "generator seed")->capture_default_str();
  gen->add_option("--step", traj.step_m, "sampling step (m)")->capture_default_str();
  gen->add_option("--start", traj.start_m, "first position (m, outside > 0)")->capture_default_str();
  gen->add_option("--end", traj.end_m, "last position (m)")->capture_default_str();
  gen->add_option("--radius", radius, "entrance half-width (m)")->capture_default_str();
  gen->add_option("--noise-rss", params.noise_rss_db, "RSS noise std (dB)")->capture_default_str();
  gen->add_option("--noise-snr", params.noise_snr_db, "SNR noise std (dB)")->capture_default_str();
  gen->add_option("--noise-sats", params.noise_sats, "satellite noise std")->capture_default_str();
  gen->add_option("--out", out_path, "output CSV (stdout when omitted)");

  // train
  auto* train_cmd = app.add_subcommand("train", "train a classifier on a CSV dataset");
  std::string algo = "knn";
  std::string data_path;
  std::string model_path;
  HyperFlags hyper;
  train_cmd->add_option("--algo", algo, "knn|nb|tree|svm")
      ->check(CLI::IsMember({"knn", "nb", "tree", "svm"}))
      ->capture_default_str();
  train_cmd->add_option("--data", data_path, "training CSV")->required();
  train_cmd->add_option("--model", model_path, "output model file (.model.json)")->required();
  add_hyper_flags(train_cmd, hyper);
  train_cmd->add_option("--seed", seed, "svm shuffle seed")->capture_default_str();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "stratified cross-validation of one classifier");
  CvConfig cv;
  std::string format = "csv";
  unsigned threads = default_threads();
  eval_cmd->add_option("--algo", algo, "knn|nb|tree|svm")
      ->check(CLI::IsMember({"knn", "nb", "tree", "svm"}))
      ->capture_default_str();
  eval_cmd->add_option("--data", data_path, "dataset CSV")->required();
  eval_cmd->add_option("--folds", cv.folds, "number of folds")->capture_default_str();
  eval_cmd->add_option("--seed", seed, "fold and svm seed")->capture_default_str();
  eval_cmd->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  eval_cmd->add_option("--threads", threads, "folds evaluated concurrently");
  eval_cmd->add_option("--out", out_path, "output file (stdout when omitted)");
  add_hyper_flags(eval_cmd, hyper);

  // bench
  auto* bench = app.add_subcommand("bench", "cross-validate all four classifiers");
  bench->add_option("--data", data_path, "dataset CSV")->required();
  bench->add_option("--folds", cv.folds, "number of folds")->capture_default_str();
  bench->add_option("--seed", seed, "fold and svm seed")->capture_default_str();
  bench->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bench->add_option("--threads", threads, "folds evaluated concurrently");
  bench->add_option("--out", out_path, "output file (stdout when omitted)");

  // detect
  auto* detect = app.add_subcommand("detect", "estimate the entrance position along a trace");
  std::string trace_path;
  std::size_t window = kDefaultSmoothingWindow;
  std::string detect_format = "json";
  detect->add_option("--model", model_path, "model file")->required();
  detect->add_option("--trace", trace_path, "trace CSV (one or more walks)")->required();
  detect->add_option("--window", window, "smoothing window (odd)")->capture_default_str();
  detect->add_option("--format", detect_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  detect->add_option("--out", out_path, "output file (stdout when omitted)");

  // rules
  auto* rules = app.add_subcommand("rules", "print the entrance rules of a tree model");
  rules->add_option("--model", model_path, "tree model file")->required();
  rules->add_option("--out", out_path, "output file (stdout when omitted)");

  // inspect
  auto* inspect = app.add_subcommand("inspect", "per-distance signal means of a dataset");
  inspect->add_option("--data", data_path, "dataset CSV")->required();
  inspect->add_option("--out", out_path, "output CSV (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      params.validate();
      traj.validate();
      if (!(radius > 0.0)) throw Error(ErrorCode::kNonpositiveRadius, "--radius must be > 0");
      if (n_traces < 1) throw Error(ErrorCode::kInvalidSpec, "--traces must be >= 1");
      const auto data = gen_dataset(params, traj, radius, n_traces, seed, default_threads());
      std::vector<SensorReading> all;
      for (const auto& t : data.traces) {
        all.insert(all.end(), t.readings().begin(), t.readings().end());
      }
      write_output(out_path, write_csv(all), out);
    } else if (train_cmd->parsed()) {
      const auto config = make_config(algo, hyper, seed);
      const auto dataset = dataset_from_readings(read_readings(data_path));
      write_output(model_path, save_model(train(config, dataset)), out);
    } else if (eval_cmd->parsed()) {
      const auto config = make_config(algo, hyper, seed);
      cv.seed = seed;
      const auto dataset = dataset_from_readings(read_readings(data_path));
      const std::vector<BenchmarkRow> rows{{algo, evaluate(config, dataset, cv, threads)}};
      write_output(out_path, format == "json" ? metrics_json(rows) : metrics_csv(rows), out);
    } else if (bench->parsed()) {
      cv.seed = seed;
      const auto dataset = dataset_from_readings(read_readings(data_path));
      const auto rows = benchmark_all(dataset, cv, threads);
      write_output(out_path, format == "json" ? metrics_json(rows) : metrics_csv(rows), out);
    } else if (detect->parsed()) {
      if (window < 1 || window % 2 == 0) throw Error(ErrorCode::kBadWindow, "--window must be odd");
      const auto model = load_model(read_file(model_path));
      const auto traces = split_traces(read_readings(trace_path));
      std::vector<DetectionResult> results;
      bool missed = false;
      for (const auto& t : traces) {
        try {
          results.push_back(estimate_entrance(model, t, window));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kNoEntranceDetected) throw;
          err << "entrance: " << e.what() << "\n";
          missed = true;
        }
      }
      std::string text;
      if (detect_format == "json") {
        text = results.size() == 1 && traces.size() == 1 ? detection_json(results.front())
                                                         : detection_json(results);
      } else {
        for (const auto& r : results) text += detection_summary(r) + "\n";
      }
      write_output(out_path, text, out);
      if (missed) return kExitData;
    } else if (rules->parsed()) {
      const auto model = load_model(read_file(model_path));
      const auto* tree = std::get_if<TreeModel>(&model);
      if (tree == nullptr) {
        err << "entrance: rules needs a tree model, got '" << algo_name(model) << "'\n";
        return kExitData;
      }
      std::string text;
      for (const auto& rule : extract_rules(*tree)) {
        text += render_rule(rule, schema_for_dimension(tree->dims)) + "\n";
      }
      write_output(out_path, text, out);
    } else if (inspect->parsed()) {
      write_output(out_path, aggregates_csv(aggregate_by_distance(read_readings(data_path))), out);
    }
  } catch (const Error& e) {
    err << "entrance: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitData;
  } catch (const IoError& e) {
    err << "entrance: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace entrance::cli
