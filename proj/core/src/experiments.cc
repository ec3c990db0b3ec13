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

#include "sboost/experiments.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "sboost/error.h"
#include "sboost/quantile.h"
#include "sboost/sampler.h"
#include "sboost/theory.h"

namespace sboost {
namespace {

std::string FormatNumber(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

bool IsTimingMetric(const std::string& metric) {
  return metric.size() >= 3 && (metric.ends_with("_ms") ||
                                metric.find("_ms_") != std::string::npos);
}

struct MeanStat {
  double mean = 0.0;
  double variance = 0.0;  // sample variance
  double stderr_value = 0.0;
};

MeanStat Summarize(std::span<const double> xs) {
  MeanStat s;
  if (xs.empty()) return s;
  const double n = static_cast<double>(xs.size());
  for (double x : xs) s.mean += x;
  s.mean /= n;
  if (xs.size() > 1) {
    for (double x : xs) s.variance += (x - s.mean) * (x - s.mean);
    s.variance /= n - 1.0;
    s.stderr_value = std::sqrt(s.variance / n);
  }
  return s;
}

double Millis(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

std::string ReportToCsv(const ExperimentReport& report, bool include_timing) {
  std::ostringstream out;
  out << kReportHeader << '\n';
  for (const ReportRow& row : report.rows) {
    const bool timing = IsTimingMetric(row.metric);
    out << row.experiment << ',' << row.dataset << ',' << row.strategy << ','
        << row.k << ',' << row.seed << ',' << row.metric << ','
        << FormatNumber(timing && !include_timing ? 0.0 : row.value) << ',';
    if (row.stderr_value) {
      out << FormatNumber(timing && !include_timing ? 0.0 : *row.stderr_value);
    }
    out << ',';
    if (row.wall_ms) out << FormatNumber(include_timing ? *row.wall_ms : 0.0);
    out << '\n';
  }
  return out.str();
}

void WriteReportCsv(const ExperimentReport& report,
                    const std::filesystem::path& path, bool include_timing) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write report " + path.string());
  out << ReportToCsv(report, include_timing);
  if (!out) throw DataError("write failed for " + path.string());
}

double Mape(std::span<const double> predictions,
            std::span<const double> targets) {
  if (predictions.size() != targets.size()) {
    throw DataError("MAPE needs equally many predictions and targets");
  }
  if (targets.empty()) throw DataError("MAPE of an empty set is undefined");
  double sum = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] == 0.0) {
      throw DataError("MAPE is undefined for a zero target (row " +
                      std::to_string(i) + ")");
    }
    sum += std::abs(predictions[i] - targets[i]) / std::abs(targets[i]);
  }
  return 100.0 * sum / static_cast<double>(targets.size());
}

double Accuracy(std::span<const double> probabilities,
                std::span<const double> labels) {
  if (probabilities.size() != labels.size() || labels.empty()) {
    throw DataError("accuracy needs equally many (>0) predictions and labels");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double predicted = probabilities[i] >= 0.5 ? 1.0 : 0.0;
    if (predicted == labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(labels.size());
}

TheoremResult TheoremExperiment(std::size_t n_max) {
  if (n_max < 1) throw ConfigError("n_max must be at least 1");
  TheoremResult result;
  result.report.name = "theorem";
  result.report.grid["n_max"] = std::to_string(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto start = std::chrono::steady_clock::now();
      const RankErrorStat stat = RankErrorExhaustive(n, k);
      const double ms = Millis(std::chrono::steady_clock::now() - start);
      const Rational formula = ExpectedRankErrorFormula(
          static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
      const bool match =
          stat.exact_raw_mean && *stat.exact_raw_mean == formula;
      ++result.cells;
      if (!match) ++result.mismatches;

      const std::string dataset = "n=" + std::to_string(n);
      result.report.rows.push_back({"theorem", dataset, "exhaustive", k, "",
                                    "raw_rank_error", stat.raw_mean,
                                    std::nullopt, std::nullopt});
      result.report.rows.push_back(
          {"theorem", dataset, "theory", k, "", "raw_rank_error",
           boost::rational_cast<double>(formula), std::nullopt, std::nullopt});
      result.report.rows.push_back({"theorem", dataset, "exhaustive", k, "",
                                    "exact_match", match ? 1.0 : 0.0,
                                    std::nullopt, std::nullopt});
      result.report.rows.push_back({"theorem", dataset, "exhaustive", k, "",
                                    "enumeration_ms", ms, std::nullopt, ms});
    }
  }
  return result;
}

RandVsGkResult RandVsGkExperiment(std::size_t n,
                                  std::span<const std::size_t> k_list,
                                  std::uint64_t runs, std::uint64_t seed) {
  if (k_list.empty()) throw ConfigError("k list must not be empty");
  for (std::size_t k : k_list) {
    if (k < 1 || k > n) {
      throw ConfigError("every k must satisfy 1 <= k <= n (got k=" +
                        std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
  }
  if (runs < 30) throw ConfigError("rand-vs-gk needs at least 30 runs");

  RandVsGkResult result;
  ExperimentReport& report = result.report;
  report.name = "rand-vs-gk";
  report.grid["n"] = std::to_string(n);
  report.grid["runs"] = std::to_string(runs);
  report.grid["seed"] = std::to_string(seed);
  const std::string dataset = "uniform_n" + std::to_string(n);
  const std::string seed_text = std::to_string(seed);

  std::vector<double> x(n);
  std::vector<std::size_t> order(n);
  std::vector<double> random_err(runs);
  std::vector<double> gk_err(runs);
  for (std::size_t ki = 0; ki < k_list.size(); ++ki) {
    const std::size_t k = k_list[ki];
    const double worst = static_cast<double>(n - k);
    std::mt19937_64 rng(Mix64(seed ^ Mix64(k)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t run = 0; run < runs; ++run) {
      for (double& v : x) v = unit(rng);
      std::sort(x.begin(), x.end());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng);
      const auto ranking = RankedObjective::FromOrder(order);

      const auto random_subset = SamplePositions(n, k, rng);
      const auto thresholds = ProposeQuantileCandidates(x, {}, k);
      std::vector<std::size_t> gk_subset;
      gk_subset.reserve(thresholds.size());
      for (double t : thresholds) {
        gk_subset.push_back(static_cast<std::size_t>(
            std::lower_bound(x.begin(), x.end(), t) - x.begin()));
      }
      random_err[run] =
          k == n ? 0.0
                 : static_cast<double>(RankError(random_subset, ranking)) /
                       worst;
      gk_err[run] =
          k == n ? 0.0
                 : static_cast<double>(RankError(gk_subset, ranking)) / worst;
    }
    const double ms = Millis(std::chrono::steady_clock::now() - start);

    const MeanStat r = Summarize(random_err);
    const MeanStat g = Summarize(gk_err);
    RandVsGkCell cell{k, r.mean, r.stderr_value, g.mean, g.stderr_value,
                      1.0 / static_cast<double>(k + 1)};
    result.cells.push_back(cell);
    const std::string metric = "normalized_rank_error";
    report.rows.push_back({report.name, dataset, "random", k, seed_text,
                           metric, r.mean, r.stderr_value, std::nullopt});
    report.rows.push_back({report.name, dataset, "gk", k, seed_text, metric,
                           g.mean, g.stderr_value, std::nullopt});
    report.rows.push_back({report.name, dataset, "theory", k, "", metric,
                           cell.theory, std::nullopt, std::nullopt});
    report.rows.push_back({report.name, dataset, "both", k, seed_text,
                           "experiment_ms", ms, std::nullopt, ms});
  }
  return result;
}

BenchmarkResult RunBenchmark(std::span<const BenchmarkDataset> datasets,
                             const BenchmarkConfig& config) {
  if (datasets.empty()) throw ConfigError("benchmark needs a dataset");
  if (config.k_list.empty() || config.seeds.empty() ||
      config.strategies.empty()) {
    throw ConfigError("benchmark grid must not be empty");
  }
  BenchmarkResult result;
  ExperimentReport& report = result.report;
  report.name = "benchmark";
  {
    std::string ks, seeds, strategies, names;
    for (std::size_t k : config.k_list) ks += (ks.empty() ? "" : ";") + std::to_string(k);
    for (auto s : config.seeds) seeds += (seeds.empty() ? "" : ";") + std::to_string(s);
    for (auto s : config.strategies) {
      strategies += (strategies.empty() ? "" : ";") + std::string(StrategyName(s));
    }
    for (const auto& d : datasets) names += (names.empty() ? "" : ";") + d.name;
    report.grid["k"] = ks;
    report.grid["seeds"] = seeds;
    report.grid["strategies"] = strategies;
    report.grid["datasets"] = names;
  }

  for (const BenchmarkDataset& data : datasets) {
    const bool classification = data.objective == Objective::kLogistic;
    const std::string metric = classification ? "accuracy" : "mape";
    auto evaluate = [&](const BoostedModel& model) {
      const auto predictions = model.Predict(data.test);
      return classification ? Accuracy(predictions, data.test.labels())
                            : Mape(predictions, data.test.labels());
    };

    for (std::size_t k : config.k_list) {
      for (Strategy strategy : config.strategies) {
        const std::string sname(StrategyName(strategy));
        std::vector<double> ensemble, single, proposal;
        for (std::uint64_t seed : config.seeds) {
          TrainConfig tc;
          tc.objective = data.objective;
          tc.strategy = strategy;
          tc.bins = k;
          tc.max_depth = config.max_depth;
          tc.params = config.params;
          tc.seed = seed;
          tc.threads = config.threads;
          const std::string seed_text = std::to_string(seed);

          if (config.single_tree) {
            TrainConfig one = tc;
            one.iterations = 1;
            one.learning_rate = 1.0;
            const TrainResult r = Train(data.train, one);
            single.push_back(evaluate(r.model));
            report.rows.push_back({report.name, data.name, sname, k, seed_text,
                                   "dt_" + metric, single.back(), std::nullopt,
                                   std::nullopt});
          }

          tc.iterations = data.ensemble_trees;
          tc.learning_rate = config.learning_rate;
          const TrainResult r = Train(data.train, tc);
          ensemble.push_back(evaluate(r.model));
          double proposal_ms = 0.0;
          double histogram_ms = 0.0;
          for (const RoundLog& round : r.log) {
            proposal_ms += round.proposal_ms;
            histogram_ms += round.histogram_ms;
          }
          proposal.push_back(proposal_ms);
          report.rows.push_back({report.name, data.name, sname, k, seed_text,
                                 "xgb_" + metric, ensemble.back(),
                                 std::nullopt, std::nullopt});
          report.rows.push_back({report.name, data.name, sname, k, seed_text,
                                 "xgb_proposal_ms", proposal_ms, std::nullopt,
                                 proposal_ms});
          report.rows.push_back({report.name, data.name, sname, k, seed_text,
                                 "xgb_histogram_ms", histogram_ms,
                                 std::nullopt, histogram_ms});
        }

        const MeanStat e = Summarize(ensemble);
        const MeanStat s = Summarize(single);
        const MeanStat p = Summarize(proposal);
        result.summaries.push_back({data.name, strategy, k, metric, e.mean,
                                    e.variance, s.mean, p.mean});
        report.rows.push_back({report.name, data.name, sname, k, "all",
                               "xgb_" + metric + "_mean", e.mean,
                               e.stderr_value, std::nullopt});
        report.rows.push_back({report.name, data.name, sname, k, "all",
                               "xgb_" + metric + "_variance", e.variance,
                               std::nullopt, std::nullopt});
        if (config.single_tree) {
          report.rows.push_back({report.name, data.name, sname, k, "all",
                                 "dt_" + metric + "_mean", s.mean,
                                 s.stderr_value, std::nullopt});
        }
        report.rows.push_back({report.name, data.name, sname, k, "all",
                               "xgb_proposal_ms_mean", p.mean, p.stderr_value,
                               p.mean});
      }
    }
  }
  return result;
}

Dataset MakeGaussianClassification(std::size_t rows, std::size_t features,
                                   std::uint64_t seed) {
  if (rows == 0 || features == 0) {
    throw ConfigError("need at least one row and one feature");
  }
  std::mt19937_64 rng(Mix64(seed));
  std::normal_distribution<double> noise(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution flip(0.05);
  const std::size_t informative = std::max<std::size_t>(1, features / 2);

  std::vector<std::vector<double>> columns(features,
                                           std::vector<double>(rows));
  std::vector<double> labels(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool positive = coin(rng);
    for (std::size_t j = 0; j < features; ++j) {
      const double shift = (positive && j < informative) ? 0.6 : 0.0;
      // Round to 4 decimals, the resolution the bundled CSV stores.
      columns[j][i] = std::round((noise(rng) + shift) * 1e4) / 1e4;
    }
    labels[i] = (positive != flip(rng)) ? 1.0 : 0.0;
  }
  return Dataset::FromColumns(std::move(columns), std::move(labels));
}

Dataset MakeLoadSeries(std::size_t hours, std::uint64_t seed) {
  if (hours == 0) throw ConfigError("need at least one hour");
  std::mt19937_64 rng(Mix64(seed));
  std::normal_distribution<double> noise(0.0, 1000.0);
  constexpr double kTau = 2.0 * std::numbers::pi;
  const std::vector<std::string> names = {
      "hour",      "dayofweek", "quarter",    "month",      "year",
      "dayofyear", "dayofmonth", "weekofyear", "is_weekend", "hourofweek"};
  std::vector<std::vector<double>> columns(names.size(),
                                           std::vector<double>(hours));
  std::vector<double> target(hours);
  for (std::size_t t = 0; t < hours; ++t) {
    const std::size_t hour = t % 24;
    const std::size_t day = t / 24;
    const std::size_t dow = day % 7;
    const std::size_t doy = day % 365;
    const std::size_t month = std::min<std::size_t>(11, doy * 12 / 365);
    const bool weekend = dow >= 5;
    const double fields[] = {static_cast<double>(hour),
                             static_cast<double>(dow),
                             static_cast<double>(month / 3),
                             static_cast<double>(month),
                             static_cast<double>(day / 365),
                             static_cast<double>(doy),
                             static_cast<double>(doy % 30),
                             static_cast<double>(doy / 7),
                             weekend ? 1.0 : 0.0,
                             static_cast<double>(dow * 24 + hour)};
    for (std::size_t j = 0; j < names.size(); ++j) columns[j][t] = fields[j];
    const double load =
        30000.0 + 0.1 * static_cast<double>(t) +
        4000.0 * std::sin(kTau * (static_cast<double>(hour) - 9.0) / 24.0) +
        (weekend ? -2500.0 : 0.0) +
        5000.0 * std::cos(kTau * (static_cast<double>(doy) - 200.0) / 365.0) +
        noise(rng);
    target[t] = std::round(load);
  }
  return Dataset::FromColumns(std::move(columns), std::move(target), names);
}

std::pair<Dataset, Dataset> SplitTail(const Dataset& ds, double test_fraction) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ConfigError("test fraction must lie in (0, 1)");
  }
  const std::size_t n = ds.num_rows();
  const auto test_rows = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * test_fraction));
  if (test_rows == 0 || test_rows >= n) {
    throw ConfigError("split leaves an empty train or test set");
  }
  std::vector<std::size_t> train(n - test_rows), test(test_rows);
  std::iota(train.begin(), train.end(), std::size_t{0});
  std::iota(test.begin(), test.end(), n - test_rows);
  return {ds.Subset(train), ds.Subset(test)};
}

}  // namespace sboost
