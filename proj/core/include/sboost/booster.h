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

#ifndef SBOOST_BOOSTER_H_
#define SBOOST_BOOSTER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sboost/data.h"
#include "sboost/objective.h"
#include "sboost/tree.h"

namespace sboost {

// How split candidates are proposed each boosting round.
enum class Strategy { kExact, kRandom, kQuantile, kWeightedQuantile };

std::string_view StrategyName(Strategy strategy);
Strategy ParseStrategy(std::string_view name);

// Sorted, distinct thresholds per feature.
struct CandidateSet {
  std::vector<std::vector<double>> thresholds;
  std::size_t k = 0;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
};

// Gradient statistics of one candidate interval. Bin 0 collects values
// below the first candidate; bin j + 1 collects [c_j, c_{j+1}).
struct HistogramBin {
  double sum_g = 0.0;
  double sum_h = 0.0;
  std::size_t count = 0;

  HistogramBin& operator+=(const HistogramBin& o) {
    sum_g += o.sum_g;
    sum_h += o.sum_h;
    count += o.count;
    return *this;
  }
  friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

using FeatureHistogram = std::vector<HistogramBin>;

// Histograms of every feature for one tree node plus the node totals
// (accumulated directly over the node's rows). Leaf-level nodes carry no
// feature histograms.
struct NodeHistogram {
  GradientPair total;
  std::size_t count = 0;
  std::vector<FeatureHistogram> features;

  NodeHistogram& operator+=(const NodeHistogram& o);
  friend bool operator==(const NodeHistogram&, const NodeHistogram&) = default;
};

// Accumulates grads[r] for every r in `rows`, in the given order, into
// candidates.size() + 1 bins. `column` and `grads` are indexed by row.
FeatureHistogram BuildHistogram(std::span<const std::size_t> rows,
                                std::span<const double> column,
                                std::span<const double> candidates,
                                std::span<const GradientPair> grads);

struct SplitInfo {
  int feature = -1;
  double threshold = 0.0;
  double gain = 0.0;
  GradientPair left;
  GradientPair right;
};

// Best split over all features and candidates by a left-to-right prefix
// scan. Requires gain > 0 and both children's hessian sums >=
// min_child_weight. Ties go to the lowest feature, then the smallest
// threshold; gains within rounding noise (1e-10 of the parent score) are
// ties. Returns nullopt when no split qualifies.
std::optional<SplitInfo> FindBestSplit(const NodeHistogram& hist,
                                       const CandidateSet& candidates,
                                       const GainParams& params);

// Depth-wise tree construction split into explicit phases so that several
// simulated workers can run it in lockstep, exchanging histograms between
// LocalHistograms() and ApplyLevel().
//
// `shard_rows` are the dataset rows this grower sees; `grads` is indexed by
// position within `shard_rows`.
class TreeGrower {
 public:
  TreeGrower(const Dataset& ds, std::span<const std::size_t> shard_rows,
             std::span<const GradientPair> grads,
             const CandidateSet& candidates, int max_depth,
             const GainParams& params, int threads = 1);

  bool Done() const { return frontier_.empty(); }

  // Histograms of the current frontier, in frontier order.
  std::vector<NodeHistogram> LocalHistograms() const;

  // Splits or finalizes every frontier node using the (globally reduced)
  // histograms, then advances one level.
  void ApplyLevel(std::span<const NodeHistogram> reduced);

  const Tree& tree() const { return tree_; }

 private:
  struct FrontierNode {
    int id;
    int depth;
    std::vector<std::uint32_t> positions;  // indices into shard_rows
  };

  const Dataset& ds_;
  std::span<const std::size_t> shard_rows_;
  std::span<const GradientPair> grads_;
  const CandidateSet& candidates_;
  int max_depth_;
  GainParams params_;
  int threads_;
  std::vector<std::vector<std::uint32_t>> bins_;  // [feature][position]
  std::vector<FrontierNode> frontier_;
  Tree tree_;
};

// Single-node convenience wrapper around TreeGrower.
Tree GrowTree(const Dataset& ds, std::span<const std::size_t> rows,
              std::span<const GradientPair> grads,
              const CandidateSet& candidates, int max_depth,
              const GainParams& params);

// Candidates for all features from the full dataset. exact: every distinct
// value; random: SampleLocal per feature; quantile: unit-weight sketch;
// weighted_quantile: sketch weighted by hessians.
CandidateSet ProposeCandidates(const Dataset& ds,
                               std::span<const GradientPair> grads,
                               Strategy strategy, std::size_t k,
                               std::uint64_t seed, std::uint64_t iteration,
                               int threads = 1);

struct TrainConfig {
  Objective objective = Objective::kLogistic;
  Strategy strategy = Strategy::kRandom;
  std::size_t bins = 100;
  int iterations = 20;
  int max_depth = 6;
  double learning_rate = 0.3;
  GainParams params;
  std::uint64_t seed = 42;
  int workers = 1;
  int threads = 0;  // 0: hardware concurrency, capped by SBOOST_NUM_THREADS

  // Throws ConfigError for out-of-range values.
  void Validate() const;
};

// Base prediction in output space; the raw margin is derived from it.
inline constexpr double kDefaultBaseScore = 0.5;

struct BoostedModel {
  Objective objective = Objective::kLogistic;
  double learning_rate = 0.3;
  double base_score = kDefaultBaseScore;
  std::size_t num_features = 0;
  std::vector<Tree> trees;
  TrainConfig config;  // echo of the training configuration

  // base_score mapped to margin space (logit for logistic).
  double BaseMargin() const;

  // Raw margins. Throws DataError on a feature-width mismatch.
  double PredictRaw(std::span<const double> row) const;
  std::vector<double> PredictRaw(const Dataset& ds) const;
  // Probabilities for logistic, identical to PredictRaw otherwise.
  std::vector<double> Predict(const Dataset& ds) const;

  friend bool operator==(const BoostedModel& a, const BoostedModel& b);
};

struct RoundLog {
  int round = 0;
  double train_metric = 0.0;
  double proposal_ms = 0.0;
  double histogram_ms = 0.0;
};

struct TrainResult {
  BoostedModel model;
  std::vector<RoundLog> log;
  std::string metric_name;  // "accuracy" or "rmse"
};

// Metric reported in training logs: accuracy at the 0.5 probability cut for
// logistic, RMSE for squared error. `raw` are margins.
std::string_view TrainMetricName(Objective objective);

// Partial sums behind TrainMetric, combinable across workers.
struct MetricSums {
  double sum = 0.0;  // correct predictions, or squared residuals
  std::size_t count = 0;
};
MetricSums AccumulateMetric(Objective objective, std::span<const double> raw,
                            std::span<const double> labels);
double FinishMetric(Objective objective, const MetricSums& sums);

double TrainMetric(Objective objective, std::span<const double> raw,
                   std::span<const double> labels);

// Boosting loop: gradients, candidate proposal, tree growth, prediction
// update. Delegates to the distributed simulator when config.workers > 1.
TrainResult Train(const Dataset& ds, const TrainConfig& config);

}  // namespace sboost

#endif  // SBOOST_BOOSTER_H_
