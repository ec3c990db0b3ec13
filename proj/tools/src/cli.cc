// Copyright 2026 The sboost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sboost/cli.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sboost/booster.h"
#include "sboost/data.h"
#include "sboost/error.h"
#include "sboost/experiments.h"
#include "sboost/model_io.h"
#include "sboost/objective.h"

namespace sboost::cli {
namespace {

namespace fs = std::filesystem;

// Every flag lives on the top-level app so that a flat key=value config file
// applies to whichever subcommand runs.
struct Options {
  std::string data;
  std::string test;
  std::string label = "label";
  std::string format = "csv";
  std::size_t num_features = 0;
  std::string model;
  std::string out;
  std::string log;
  std::string objective = "logistic";
  std::string strategy = "random";
  int iterations = 20;
  int max_depth = 6;
  double eta = 0.3;
  double lambda = 1.0;
  double gamma = 0.0;
  double min_child_weight = 1.0;
  int workers = 1;
  std::uint64_t seed = 42;
  int threads = 0;
  bool output_margin = false;
  bool no_timing = false;
  // experiments
  std::size_t n_max = 12;
  std::size_t n = 1000;
  std::vector<std::size_t> k_list;
  std::uint64_t runs = 1000;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<std::string> strategies{"random", "weighted_quantile"};
  std::string data_dir = "data";
  std::vector<std::string> datasets{"synthetic_classification",
                                    "load_series"};
  std::string task;
  int trees = 0;
  // generate
  std::string kind = "classification";
  std::size_t rows = 12500;
  std::size_t features = 20;
  std::size_t hours = 17520;
  double test_fraction = 0.2;
};

std::string FormatNumber(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Writes to `path`, or to `out` when the path is empty or "-".
void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write " + path);
  file << text;
  if (!file) throw DataError("write failed for " + path);
}

TrainConfig MakeTrainConfig(const Options& o) {
  TrainConfig c;
  c.objective = ParseObjective(o.objective);
  c.strategy = ParseStrategy(o.strategy);
  if (o.k_list.size() > 1) {
    throw ConfigError("training takes a single --bins value");
  }
  c.bins = o.k_list.empty() ? 100 : o.k_list.front();
  c.iterations = o.iterations;
  c.max_depth = o.max_depth;
  c.learning_rate = o.eta;
  c.params.lambda = o.lambda;
  c.params.gamma = o.gamma;
  c.params.min_child_weight = o.min_child_weight;
  c.seed = o.seed;
  c.workers = o.workers;
  c.threads = o.threads;
  c.Validate();
  return c;
}

Dataset LoadLabeled(const Options& o, const std::string& path) {
  if (o.format == "libsvm") {
    if (o.num_features == 0) {
      throw ConfigError("--num-features is required for libsvm input");
    }
    return LoadLibsvm(path, o.num_features);
  }
  CsvOptions csv;
  csv.label_column = o.label;
  return LoadCsv(path, csv);
}

int RunTrain(const Options& o, std::ostream& out) {
  if (o.data.empty()) throw ConfigError("train needs --data");
  if (o.out.empty()) throw ConfigError("train needs --out for the model");
  const TrainConfig config = MakeTrainConfig(o);
  const Dataset train = LoadLabeled(o, o.data);
  const TrainResult result = Train(train, config);
  SaveModel(result.model, o.out);

  std::string log_path = o.log;
  if (log_path.empty()) {
    log_path = fs::path(o.out).replace_extension(".log.csv").string();
  }
  std::ostringstream log;
  log << "round," << "train_" << result.metric_name
      << ",proposal_ms,histogram_ms\n";
  for (const RoundLog& r : result.log) {
    log << r.round << ',' << FormatNumber(r.train_metric) << ','
        << FormatNumber(o.no_timing ? 0.0 : r.proposal_ms) << ','
        << FormatNumber(o.no_timing ? 0.0 : r.histogram_ms) << '\n';
  }
  Emit(log.str(), log_path, out);

  out << "trained " << result.model.trees.size() << " trees ("
      << StrategyName(config.strategy) << ", k=" << config.bins
      << ", workers=" << config.workers << ")\n";
  if (!result.log.empty()) {
    out << "train " << result.metric_name << ": "
        << FormatNumber(result.log.back().train_metric) << '\n';
  }
  if (!o.test.empty()) {
    const Dataset test = LoadLabeled(o, o.test);
    const auto raw = result.model.PredictRaw(test);
    out << "test " << result.metric_name << ": "
        << FormatNumber(TrainMetric(config.objective, raw, test.labels()))
        << '\n';
  }
  return kExitOk;
}

int RunPredict(const Options& o, std::ostream& out) {
  if (o.model.empty()) throw ConfigError("predict needs --model");
  if (o.data.empty()) throw ConfigError("predict needs --data");
  const BoostedModel model = LoadModel(o.model);

  std::optional<Dataset> data;
  if (o.format == "libsvm") {
    data = LoadLibsvm(o.data, model.num_features);
  } else {
    CsvTable table = ReadCsvTable(o.data, /*has_header=*/true);
    std::vector<std::vector<double>> columns;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      if (table.header[j] == o.label) continue;
      columns.push_back(std::move(table.columns[j]));
      names.push_back(table.header[j]);
    }
    if (table.num_rows == 0) {
      Emit("", o.out, out);
      return kExitOk;
    }
    if (columns.size() != model.num_features) {
      throw DataError(o.data + ": has " + std::to_string(columns.size()) +
                      " feature columns, model expects " +
                      std::to_string(model.num_features));
    }
    std::vector<double> labels(table.num_rows, 0.0);
    data = Dataset::FromColumns(std::move(columns), std::move(labels),
                                std::move(names));
  }
  if (data->num_features() != model.num_features) {
    throw DataError(o.data + ": has " + std::to_string(data->num_features()) +
                    " feature columns, model expects " +
                    std::to_string(model.num_features));
  }
  const auto values =
      o.output_margin ? model.PredictRaw(*data) : model.Predict(*data);
  std::string text = "prediction\n";
  for (double v : values) text += FormatNumber(v) + '\n';
  Emit(text, o.out, out);
  return kExitOk;
}

int RunTheorem(const Options& o, std::ostream& out, std::ostream& err) {
  const TheoremResult result = TheoremExperiment(o.n_max);
  Emit(ReportToCsv(result.report, !o.no_timing), o.out, out);
  std::ostream& note = (o.out.empty() || o.out == "-") ? err : out;
  note << "theorem: " << result.cells << " cells, " << result.mismatches
       << " mismatches\n";
  return result.mismatches == 0 ? kExitOk : kExitRuntime;
}

int RunRandVsGk(const Options& o, std::ostream& out) {
  std::vector<std::size_t> ks = o.k_list;
  if (ks.empty()) ks = {5, 10, 20, 50, 100};
  const RandVsGkResult result = RandVsGkExperiment(o.n, ks, o.runs, o.seed);
  Emit(ReportToCsv(result.report, !o.no_timing), o.out, out);
  return kExitOk;
}

struct KnownDataset {
  Objective objective;
  int trees;
};

const std::map<std::string, KnownDataset>& KnownDatasets() {
  static const std::map<std::string, KnownDataset> known = {
      {"synthetic_classification", {Objective::kLogistic, 20}},
      {"breast_cancer", {Objective::kLogistic, 20}},
      {"load_series", {Objective::kSquaredError, 50}},
  };
  return known;
}

Objective TaskObjective(const std::string& task) {
  if (task == "classification") return Objective::kLogistic;
  if (task == "regression") return Objective::kSquaredError;
  throw ConfigError("--task must be classification or regression");
}

int RunBenchmarkCommand(const Options& o, std::ostream& out) {
  struct Spec {
    std::string name;
    fs::path train;
    fs::path test;
    Objective objective;
    int trees;
  };
  std::vector<Spec> specs;
  if (!o.data.empty()) {
    if (o.test.empty()) throw ConfigError("benchmark with --data needs --test");
    if (o.task.empty()) throw ConfigError("benchmark with --data needs --task");
    const Objective obj = TaskObjective(o.task);
    specs.push_back({fs::path(o.data).stem().string(), o.data, o.test, obj,
                     obj == Objective::kLogistic ? 20 : 50});
  } else {
    for (const std::string& name : o.datasets) {
      Spec s{name, fs::path(o.data_dir) / (name + "_train.csv"),
             fs::path(o.data_dir) / (name + "_test.csv"),
             Objective::kLogistic, 20};
      if (const auto it = KnownDatasets().find(name);
          it != KnownDatasets().end()) {
        s.objective = it->second.objective;
        s.trees = it->second.trees;
      } else if (!o.task.empty()) {
        s.objective = TaskObjective(o.task);
      } else {
        throw ConfigError("unknown dataset '" + name + "'; pass --task");
      }
      specs.push_back(std::move(s));
    }
  }
  for (const Spec& s : specs) {
    for (const fs::path& p : {s.train, s.test}) {
      if (!fs::is_regular_file(p)) {
        throw ConfigError("benchmark dataset file not found: " + p.string());
      }
    }
  }

  std::vector<BenchmarkDataset> datasets;
  for (const Spec& s : specs) {
    CsvOptions csv;
    csv.label_column = o.label;
    datasets.push_back({s.name, s.objective, LoadCsv(s.train, csv),
                        LoadCsv(s.test, csv), o.trees > 0 ? o.trees : s.trees});
  }
  BenchmarkConfig config;
  config.strategies.clear();
  for (const auto& name : o.strategies) {
    config.strategies.push_back(ParseStrategy(name));
  }
  if (!o.k_list.empty()) config.k_list = o.k_list;
  config.seeds = o.seeds;
  config.max_depth = o.max_depth;
  config.learning_rate = o.eta;
  config.params.lambda = o.lambda;
  config.params.gamma = o.gamma;
  config.params.min_child_weight = o.min_child_weight;
  config.params.Validate();
  config.threads = o.threads;
  const BenchmarkResult result = RunBenchmark(datasets, config);
  Emit(ReportToCsv(result.report, !o.no_timing), o.out, out);
  return kExitOk;
}

int RunGenerate(const Options& o, std::ostream& out) {
  const fs::path dir = o.out.empty() ? fs::path(o.data_dir) : fs::path(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::string name;
  Dataset full;
  if (o.kind == "classification") {
    name = "synthetic_classification";
    full = MakeGaussianClassification(o.rows, o.features, o.seed);
  } else if (o.kind == "load-series") {
    name = "load_series";
    full = MakeLoadSeries(o.hours, o.seed);
  } else {
    throw ConfigError("--kind must be classification or load-series");
  }
  const auto [train, test] = SplitTail(full, o.test_fraction);
  WriteCsv(train, dir / (name + "_train.csv"), o.label);
  WriteCsv(test, dir / (name + "_test.csv"), o.label);
  out << "wrote " << (dir / (name + "_train.csv")).string() << " ("
      << train.num_rows() << " rows) and "
      << (dir / (name + "_test.csv")).string() << " (" << test.num_rows()
      << " rows)\n";
  return kExitOk;
}

void AddOptions(CLI::App& app, Options& o) {
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "Flat key=value file; flags override it");

  auto* io = "Input/output";
  app.add_option("--data", o.data, "Training or input data file")->group(io);
  app.add_option("--test", o.test, "Held-out data file")->group(io);
  app.add_option("--label", o.label, "Label column name (CSV)")->group(io);
  app.add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"csv", "libsvm"}))
      ->group(io);
  app.add_option("--num-features", o.num_features,
                 "Feature count for libsvm input")
      ->group(io);
  app.add_option("--model", o.model, "Model file to read (predict)")
      ->group(io);
  app.add_option("--out", o.out,
                 "Output: model (train), predictions/report (stdout if "
                 "empty), directory (generate)")
      ->group(io);
  app.add_option("--log", o.log,
                 "Training log CSV (default: model path with .log.csv)")
      ->group(io);
  app.add_flag("--output-margin", o.output_margin,
               "Predict raw margins instead of probabilities")
      ->group(io);
  app.add_flag("--no-timing", o.no_timing,
               "Write 0 for every timing value so reruns are byte-identical")
      ->group(io);

  auto* train = "Training";
  app.add_option("--objective", o.objective, "Loss")
      ->check(CLI::IsMember({"logistic", "squared_error"}))
      ->group(train);
  app.add_option("--strategy", o.strategy, "Split candidate proposal")
      ->check(CLI::IsMember(
          {"exact", "random", "quantile", "weighted_quantile"}))
      ->group(train);
  app.add_option("--iterations", o.iterations, "Boosting rounds")
      ->group(train);
  app.add_option("--max-depth", o.max_depth, "Maximum tree depth")
      ->group(train);
  app.add_option("--eta", o.eta, "Learning rate")->group(train);
  app.add_option("--lambda", o.lambda, "L2 regularization on leaf weights")
      ->group(train);
  app.add_option("--gamma", o.gamma, "Minimum gain to split")->group(train);
  app.add_option("--min-child-weight", o.min_child_weight,
                 "Minimum hessian sum per child")
      ->group(train);
  app.add_option("--workers", o.workers, "Simulated workers")->group(train);
  app.add_option("--seed", o.seed, "Random seed")->group(train);
  app.add_option("--threads", o.threads,
                 "Threads per worker (0: all cores, capped by "
                 "SBOOST_NUM_THREADS)")
      ->group(train);

  auto* exp = "Experiments";
  app.add_option("--n-max", o.n_max, "theorem: largest n")->group(exp);
  app.add_option("--n", o.n, "rand-vs-gk: points per run")->group(exp);
  app.add_option("-k,--bins,--k", o.k_list,
                 "Candidates per feature; a comma separated grid for "
                 "experiments (default: train 100, rand-vs-gk "
                 "5,10,20,50,100, benchmark 10,50,100)")
      ->delimiter(',')
      ->group(train);
  app.add_option("--runs", o.runs, "rand-vs-gk: Monte Carlo runs")
      ->group(exp);
  app.add_option("--seeds", o.seeds, "benchmark: seeds")
      ->delimiter(',')
      ->group(exp);
  app.add_option("--strategies", o.strategies, "benchmark: strategies")
      ->delimiter(',')
      ->group(exp);
  app.add_option("--data-dir", o.data_dir,
                 "benchmark/generate: dataset directory")
      ->group(exp);
  app.add_option("--datasets", o.datasets,
                 "benchmark: dataset names (<name>_train.csv, "
                 "<name>_test.csv)")
      ->delimiter(',')
      ->group(exp);
  app.add_option("--task", o.task,
                 "benchmark: classification or regression for --data")
      ->group(exp);
  app.add_option("--trees", o.trees,
                 "benchmark: ensemble size (0: 20, or 50 for regression)")
      ->group(exp);

  auto* gen = "Generate";
  app.add_option("--kind", o.kind, "classification or load-series")
      ->group(gen);
  app.add_option("--rows", o.rows, "classification rows")->group(gen);
  app.add_option("--features", o.features, "classification features")
      ->group(gen);
  app.add_option("--hours", o.hours, "load-series length")->group(gen);
  app.add_option("--test-fraction", o.test_fraction,
                 "Tail fraction written as the test file")
      ->group(gen);
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Gradient boosted trees with pluggable split candidate "
               "proposal",
               "sboost"};
  app.fallthrough();
  app.require_subcommand(1);
  AddOptions(app, o);

  auto* train = app.add_subcommand("train", "Train a model");
  auto* predict = app.add_subcommand("predict", "Predict with a model");
  auto* experiment = app.add_subcommand("experiment", "Run an experiment");
  auto* theorem = experiment->add_subcommand(
      "theorem", "Exhaustive check of the expected rank error formula");
  auto* rand_vs_gk = experiment->add_subcommand(
      "rand-vs-gk", "Rank error of random vs sketch candidates");
  auto* benchmark = experiment->add_subcommand(
      "benchmark", "Accuracy/MAPE and proposal time, random vs quantile");
  auto* generate =
      app.add_subcommand("generate", "Write a bundled synthetic dataset");
  experiment->require_subcommand(1);
  for (CLI::App* sub :
       {train, predict, experiment, theorem, rand_vs_gk, benchmark, generate}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (train->parsed()) return RunTrain(o, out);
    if (predict->parsed()) return RunPredict(o, out);
    if (theorem->parsed()) return RunTheorem(o, out, err);
    if (rand_vs_gk->parsed()) return RunRandVsGk(o, out);
    if (benchmark->parsed()) return RunBenchmarkCommand(o, out);
    if (generate->parsed()) return RunGenerate(o, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace sboost::cli
