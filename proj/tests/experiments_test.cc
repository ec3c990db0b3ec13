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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "sboost/error.h"
#include "test_util.h"

namespace sboost {
namespace {

TEST(Mape, Examples) {
  EXPECT_EQ(Mape(std::vector<double>{5, 7}, std::vector<double>{5, 7}), 0.0);
  EXPECT_DOUBLE_EQ(Mape(std::vector<double>{110}, std::vector<double>{100}),
                   10.0);
  EXPECT_DOUBLE_EQ(
      Mape(std::vector<double>{90, 110}, std::vector<double>{100, 100}), 10.0);
  EXPECT_THROW(Mape(std::vector<double>{1}, std::vector<double>{0}), DataError);
  EXPECT_THROW(Mape(std::vector<double>{1, 2}, std::vector<double>{1}),
               DataError);
}

TEST(Accuracy, ThresholdAtHalf) {
  EXPECT_DOUBLE_EQ(Accuracy(std::vector<double>{0.5, 0.49, 0.9, 0.1},
                            std::vector<double>{1, 0, 0, 0}),
                   0.75);
}

TEST(TheoremExperiment, SmallGridAllMatch) {
  const TheoremResult r = TheoremExperiment(7);
  EXPECT_EQ(r.cells, 28u);
  EXPECT_EQ(r.mismatches, 0u);
  for (const ReportRow& row : r.report.rows) {
    EXPECT_TRUE(std::isfinite(row.value));
    if (row.metric == "exact_match") EXPECT_EQ(row.value, 1.0);
  }
  EXPECT_THROW(TheoremExperiment(0), ConfigError);
}

TEST(RandVsGk, FullSubsetHasNoError) {
  const std::vector<std::size_t> ks{50};
  const RandVsGkResult r = RandVsGkExperiment(50, ks, 30, 1);
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.cells[0].random_mean, 0.0);
  EXPECT_EQ(r.cells[0].gk_mean, 0.0);
}

TEST(RandVsGk, ReciprocalLawAndNoSignificantGap) {
  const std::vector<std::size_t> ks{10};
  const RandVsGkResult r = RandVsGkExperiment(1000, ks, 1000, 42);
  const RandVsGkCell& c = r.cells[0];
  EXPECT_NEAR(c.theory, 1.0 / 11.0, 1e-15);
  EXPECT_LE(std::abs(c.random_mean - c.theory), 3 * c.random_stderr);
  EXPECT_LE(std::abs(c.random_mean - c.gk_mean),
            3 * std::hypot(c.random_stderr, c.gk_stderr));
  bool has_theory = false;
  for (const auto& row : r.report.rows) has_theory |= row.strategy == "theory";
  EXPECT_TRUE(has_theory);
}

TEST(RandVsGk, GuardsGrid) {
  const std::vector<std::size_t> big{2000};
  EXPECT_THROW(RandVsGkExperiment(1000, big, 100, 1), ConfigError);
  const std::vector<std::size_t> ok{10};
  EXPECT_THROW(RandVsGkExperiment(1000, ok, 10, 1), ConfigError);
  EXPECT_THROW(RandVsGkExperiment(1000, {}, 100, 1), ConfigError);
}

std::vector<BenchmarkDataset> TinyDatasets() {
  auto [ctrain, ctest] = SplitTail(MakeGaussianClassification(1500, 6, 3), 0.2);
  auto [rtrain, rtest] = SplitTail(MakeLoadSeries(24 * 60, 4), 0.2);
  std::vector<BenchmarkDataset> out;
  out.push_back({"cls", Objective::kLogistic, ctrain, ctest, 5});
  out.push_back({"reg", Objective::kSquaredError, rtrain, rtest, 5});
  return out;
}

TEST(Benchmark, ReportCoversGridOnceAndIsDeterministic) {
  const auto datasets = TinyDatasets();
  BenchmarkConfig config;
  config.k_list = {8, 16};
  config.seeds = {1, 2, 3};
  config.max_depth = 3;
  const BenchmarkResult a = RunBenchmark(datasets, config);
  const BenchmarkResult b = RunBenchmark(datasets, config);
  EXPECT_EQ(ReportToCsv(a.report, false), ReportToCsv(b.report, false));

  std::map<std::tuple<std::string, std::string, std::size_t, std::string,
                      std::string>,
           int>
      cells;
  for (const ReportRow& row : a.report.rows) {
    EXPECT_TRUE(std::isfinite(row.value)) << row.metric;
    ++cells[{row.dataset, row.strategy, row.k, row.seed, row.metric}];
  }
  for (const auto& [key, n] : cells) EXPECT_EQ(n, 1);
  for (const auto& d : datasets) {
    for (Strategy s : config.strategies) {
      for (std::size_t k : config.k_list) {
        for (auto seed : config.seeds) {
          const std::string metric =
              d.objective == Objective::kLogistic ? "xgb_accuracy" : "xgb_mape";
          EXPECT_EQ((cells[{d.name, std::string(StrategyName(s)), k,
                            std::to_string(seed), metric}]),
                    1);
        }
      }
    }
  }
  EXPECT_EQ(a.summaries.size(), 2u * 2u * 2u);
  for (const auto& s : a.summaries) {
    EXPECT_GE(s.ensemble_variance, 0.0);
    if (s.metric == "accuracy") {
      EXPECT_GT(s.ensemble_mean, 0.5);
    } else {
      EXPECT_LT(s.ensemble_mean, 50.0);
    }
  }
}

TEST(Report, TimingCanBeZeroed) {
  ExperimentReport r;
  r.rows.push_back({"e", "d", "random", 10, "1", "proposal_ms", 3.5, 0.25, 3.5});
  r.rows.push_back({"e", "d", "random", 10, "1", "accuracy", 0.75,
                    std::nullopt, std::nullopt});
  EXPECT_EQ(ReportToCsv(r, true),
            std::string(kReportHeader) +
                "\ne,d,random,10,1,proposal_ms,3.5,0.25,3.5\n"
                "e,d,random,10,1,accuracy,0.75,,\n");
  EXPECT_EQ(ReportToCsv(r, false),
            std::string(kReportHeader) +
                "\ne,d,random,10,1,proposal_ms,0,0,0\n"
                "e,d,random,10,1,accuracy,0.75,,\n");
}

TEST(Generators, ShapesAndSplit) {
  const Dataset c = MakeGaussianClassification(1000, 20, 1);
  EXPECT_EQ(c.num_rows(), 1000u);
  EXPECT_EQ(c.num_features(), 20u);
  double positives = 0;
  for (double y : c.labels()) {
    EXPECT_TRUE(y == 0.0 || y == 1.0);
    positives += y;
  }
  EXPECT_NEAR(positives / 1000.0, 0.5, 0.06);
  EXPECT_EQ(MakeGaussianClassification(1000, 20, 1), c);

  const Dataset s = MakeLoadSeries(24 * 30, 2);
  EXPECT_EQ(s.num_features(), 10u);
  for (double y : s.labels()) EXPECT_GT(y, 1000.0);

  const auto [train, test] = SplitTail(s, 0.25);
  EXPECT_EQ(train.num_rows(), 540u);
  EXPECT_EQ(test.num_rows(), 180u);
  EXPECT_EQ(test.Row(0), s.Row(540));
  EXPECT_THROW(SplitTail(s, 0.0), ConfigError);
}

}  // namespace
}  // namespace sboost
