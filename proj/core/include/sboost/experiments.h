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

#ifndef SBOOST_EXPERIMENTS_H_
#define SBOOST_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sboost/booster.h"
#include "sboost/data.h"

namespace sboost {

// One metric value. Empty seed/stderr/wall_ms fields are written as empty
// CSV cells.
struct ReportRow {
  std::string experiment;
  std::string dataset;
  std::string strategy;
  std::size_t k = 0;
  std::string seed;
  std::string metric;
  double value = 0.0;
  std::optional<double> stderr_value;
  std::optional<double> wall_ms;
};

struct ExperimentReport {
  std::string name;
  std::map<std::string, std::string> grid;  // declared parameter grid
  std::vector<ReportRow> rows;
};

inline constexpr const char* kReportHeader =
    "experiment,dataset,strategy,k,seed,metric,value,stderr,wall_ms";

// CSV with kReportHeader. With include_timing == false every wall_ms cell
// and every timing metric is written as 0 so that reruns are byte-identical.
std::string ReportToCsv(const ExperimentReport& report, bool include_timing);
void WriteReportCsv(const ExperimentReport& report,
                    const std::filesystem::path& path, bool include_timing);

// 100 * mean(|pred - target| / |target|). Throws DataError on a zero
// target or a length mismatch.
double Mape(std::span<const double> predictions,
            std::span<const double> targets);

// Fraction of rows where (probability >= 0.5) matches the 0/1 label.
double Accuracy(std::span<const double> probabilities,
                std::span<const double> labels);

// Exhaustive check of the closed-form expected rank error for every
// 1 <= k <= n <= n_max.
struct TheoremResult {
  ExperimentReport report;
  std::size_t cells = 0;
  std::size_t mismatches = 0;
};
TheoremResult TheoremExperiment(std::size_t n_max);

struct RandVsGkCell {
  std::size_t k = 0;
  double random_mean = 0.0;
  double random_stderr = 0.0;
  double gk_mean = 0.0;
  double gk_stderr = 0.0;
  double theory = 0.0;  // 1 / (k + 1)
};
struct RandVsGkResult {
  ExperimentReport report;
  std::vector<RandVsGkCell> cells;
};

// Normalized rank error of random vs sketch-selected subsets of n uniform
// points under a random ranking, averaged over `runs`.
RandVsGkResult RandVsGkExperiment(std::size_t n,
                                  std::span<const std::size_t> k_list,
                                  std::uint64_t runs, std::uint64_t seed);

struct BenchmarkDataset {
  std::string name;
  Objective objective = Objective::kLogistic;
  Dataset train;
  Dataset test;
  int ensemble_trees = 20;
};

struct BenchmarkConfig {
  std::vector<Strategy> strategies{Strategy::kRandom,
                                   Strategy::kWeightedQuantile};
  std::vector<std::size_t> k_list{10, 50, 100};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  int max_depth = 6;
  double learning_rate = 0.3;
  GainParams params;
  int threads = 1;
  bool single_tree = true;  // also train the one-tree (eta = 1) model
};

// Per (dataset, strategy, k) aggregate over seeds.
struct BenchmarkSummary {
  std::string dataset;
  Strategy strategy = Strategy::kRandom;
  std::size_t k = 0;
  std::string metric;            // "accuracy" or "mape"
  double ensemble_mean = 0.0;
  double ensemble_variance = 0.0;  // sample variance across seeds
  double single_tree_mean = 0.0;
  double proposal_ms_mean = 0.0;   // ensemble training, summed over rounds
};

struct BenchmarkResult {
  ExperimentReport report;
  std::vector<BenchmarkSummary> summaries;
};

BenchmarkResult RunBenchmark(std::span<const BenchmarkDataset> datasets,
                             const BenchmarkConfig& config);

// Two Gaussian classes (balanced) with mean shifts on the first half of the
// features, plus a small fraction of flipped labels.
Dataset MakeGaussianClassification(std::size_t rows, std::size_t features,
                                   std::uint64_t seed);

// Hourly load-style series: trend, daily/weekly/yearly seasonality and noise.
// Features are calendar fields; the target stays well away from zero.
Dataset MakeLoadSeries(std::size_t hours, std::uint64_t seed);

// Splits off the last `test_fraction` of rows (chronological split).
std::pair<Dataset, Dataset> SplitTail(const Dataset& ds, double test_fraction);

}  // namespace sboost

#endif  // SBOOST_EXPERIMENTS_H_
