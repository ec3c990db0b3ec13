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

#include "sboost/booster.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <tuple>

#include "sboost/distsim.h"
#include "sboost/error.h"
#include "sboost/parallel.h"
#include "sboost/quantile.h"
#include "sboost/sampler.h"

namespace sboost {
namespace {

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<double> DistinctSorted(std::span<const double> column) {
  std::vector<double> out(column.begin(), column.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint32_t BinOf(std::span<const double> candidates, double value) {
  return static_cast<std::uint32_t>(
      std::upper_bound(candidates.begin(), candidates.end(), value) -
      candidates.begin());
}

}  // namespace

std::string_view StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kExact:
      return "exact";
    case Strategy::kRandom:
      return "random";
    case Strategy::kQuantile:
      return "quantile";
    case Strategy::kWeightedQuantile:
      return "weighted_quantile";
  }
  return "unknown";
}

Strategy ParseStrategy(std::string_view name) {
  for (Strategy s : {Strategy::kExact, Strategy::kRandom, Strategy::kQuantile,
                     Strategy::kWeightedQuantile}) {
    if (StrategyName(s) == name) return s;
  }
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (expected exact, random, quantile, weighted_quantile)");
}

NodeHistogram& NodeHistogram::operator+=(const NodeHistogram& o) {
  if (features.size() != o.features.size()) {
    throw ProtocolError("histogram feature count mismatch");
  }
  total += o.total;
  count += o.count;
  for (std::size_t f = 0; f < features.size(); ++f) {
    if (features[f].size() != o.features[f].size()) {
      throw ProtocolError("histogram bin layout mismatch for feature " +
                          std::to_string(f));
    }
    for (std::size_t b = 0; b < features[f].size(); ++b) {
      features[f][b] += o.features[f][b];
    }
  }
  return *this;
}

FeatureHistogram BuildHistogram(std::span<const std::size_t> rows,
                                std::span<const double> column,
                                std::span<const double> candidates,
                                std::span<const GradientPair> grads) {
  FeatureHistogram hist(candidates.size() + 1);
  for (std::size_t r : rows) {
    HistogramBin& bin = hist[BinOf(candidates, column[r])];
    bin.sum_g += grads[r].g;
    bin.sum_h += grads[r].h;
    ++bin.count;
  }
  return hist;
}

std::optional<SplitInfo> FindBestSplit(const NodeHistogram& hist,
                                       const CandidateSet& candidates,
                                       const GainParams& params) {
  std::optional<SplitInfo> best;
  const GradientPair total = hist.total;
  // Two candidates that induce the same row partition can differ by rounding
  // only (bins are summed in different orders), so gains this close count
  // as ties and keep the earlier split.
  const double parent = total.h + params.lambda > 0.0
                            ? total.g * total.g / (total.h + params.lambda)
                            : 0.0;
  const double tie = 1e-10 * parent;
  for (std::size_t f = 0; f < hist.features.size(); ++f) {
    const auto& bins = hist.features[f];
    const auto& cuts = candidates.thresholds[f];
    GradientPair left;
    // Threshold c_j sends bins [0, j] left.
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      left.g += bins[j].sum_g;
      left.h += bins[j].sum_h;
      const GradientPair right = total - left;
      if (left.h < params.min_child_weight ||
          right.h < params.min_child_weight) {
        continue;
      }
      const double gain = SplitGain(left.g, left.h, right.g, right.h, params);
      if (gain > 0.0 &&
          (!best || gain > best->gain + tie + 1e-12 * best->gain)) {
        best = SplitInfo{static_cast<int>(f), cuts[j], gain, left, right};
      }
    }
  }
  return best;
}

TreeGrower::TreeGrower(const Dataset& ds,
                       std::span<const std::size_t> shard_rows,
                       std::span<const GradientPair> grads,
                       const CandidateSet& candidates, int max_depth,
                       const GainParams& params, int threads)
    : ds_(ds),
      shard_rows_(shard_rows),
      grads_(grads),
      candidates_(candidates),
      max_depth_(max_depth),
      params_(params),
      threads_(threads) {
  if (max_depth < 0) throw ConfigError("max_depth must be >= 0");
  if (grads.size() != shard_rows.size()) {
    throw ConfigError("gradient count does not match shard rows");
  }
  if (candidates.thresholds.size() != ds.num_features()) {
    throw ConfigError("candidate set does not cover every feature");
  }
  if (max_depth > 0) {
    bins_.resize(ds.num_features());
    ParallelFor(ds.num_features(), threads_, [&](std::size_t f) {
      const auto column = ds.column(f);
      const auto& cuts = candidates.thresholds[f];
      auto& out = bins_[f];
      out.resize(shard_rows.size());
      for (std::size_t p = 0; p < shard_rows.size(); ++p) {
        out[p] = BinOf(cuts, column[shard_rows[p]]);
      }
    });
  }
  FrontierNode root{0, 0, {}};
  root.positions.resize(shard_rows.size());
  std::iota(root.positions.begin(), root.positions.end(), 0u);
  tree_.nodes.emplace_back();
  frontier_.push_back(std::move(root));
}

std::vector<NodeHistogram> TreeGrower::LocalHistograms() const {
  std::vector<NodeHistogram> out(frontier_.size());
  for (std::size_t n = 0; n < frontier_.size(); ++n) {
    const FrontierNode& node = frontier_[n];
    NodeHistogram& hist = out[n];
    for (std::uint32_t p : node.positions) hist.total += grads_[p];
    hist.count = node.positions.size();
    if (node.depth >= max_depth_) continue;

    hist.features.resize(ds_.num_features());
    ParallelFor(ds_.num_features(), threads_, [&](std::size_t f) {
      FeatureHistogram& fh = hist.features[f];
      fh.assign(candidates_.thresholds[f].size() + 1, HistogramBin{});
      const auto& bins = bins_[f];
      for (std::uint32_t p : node.positions) {
        HistogramBin& bin = fh[bins[p]];
        bin.sum_g += grads_[p].g;
        bin.sum_h += grads_[p].h;
        ++bin.count;
      }
    });
  }
  return out;
}

void TreeGrower::ApplyLevel(std::span<const NodeHistogram> reduced) {
  if (reduced.size() != frontier_.size()) {
    throw ProtocolError("reduced histogram count does not match frontier");
  }
  std::vector<FrontierNode> next;
  for (std::size_t n = 0; n < frontier_.size(); ++n) {
    FrontierNode& node = frontier_[n];
    const NodeHistogram& hist = reduced[n];
    std::optional<SplitInfo> split;
    if (node.depth < max_depth_) {
      split = FindBestSplit(hist, candidates_, params_);
    }
    if (!split) {
      TreeNode& leaf = tree_.nodes[node.id];
      leaf = TreeNode{};
      leaf.weight = LeafWeight(hist.total.g, hist.total.h, params_);
      continue;
    }

    const int left_id = static_cast<int>(tree_.nodes.size());
    const int right_id = left_id + 1;
    tree_.nodes.emplace_back();
    tree_.nodes.emplace_back();
    TreeNode& internal = tree_.nodes[node.id];
    internal.feature = split->feature;
    internal.threshold = split->threshold;
    internal.left = left_id;
    internal.right = right_id;

    FrontierNode left{left_id, node.depth + 1, {}};
    FrontierNode right{right_id, node.depth + 1, {}};
    const auto column = ds_.column(static_cast<std::size_t>(split->feature));
    for (std::uint32_t p : node.positions) {
      if (column[shard_rows_[p]] < split->threshold) {
        left.positions.push_back(p);
      } else {
        right.positions.push_back(p);
      }
    }
    next.push_back(std::move(left));
    next.push_back(std::move(right));
  }
  frontier_ = std::move(next);
}

Tree GrowTree(const Dataset& ds, std::span<const std::size_t> rows,
              std::span<const GradientPair> grads,
              const CandidateSet& candidates, int max_depth,
              const GainParams& params) {
  std::vector<GradientPair> local(rows.size());
  for (std::size_t p = 0; p < rows.size(); ++p) local[p] = grads[rows[p]];
  TreeGrower grower(ds, rows, local, candidates, max_depth, params);
  while (!grower.Done()) grower.ApplyLevel(grower.LocalHistograms());
  return grower.tree();
}

CandidateSet ProposeCandidates(const Dataset& ds,
                               std::span<const GradientPair> grads,
                               Strategy strategy, std::size_t k,
                               std::uint64_t seed, std::uint64_t iteration,
                               int threads) {
  if (k == 0) throw ConfigError("bins must be at least 1");
  CandidateSet out;
  out.k = k;
  out.thresholds.resize(ds.num_features());
  std::vector<double> hessians;
  if (strategy == Strategy::kWeightedQuantile) {
    if (grads.size() != ds.num_rows()) {
      throw ConfigError("weighted proposal needs one gradient per row");
    }
    hessians.resize(grads.size());
    for (std::size_t i = 0; i < grads.size(); ++i) hessians[i] = grads[i].h;
  }
  ParallelFor(ds.num_features(), threads, [&](std::size_t f) {
    const auto column = ds.column(f);
    switch (strategy) {
      case Strategy::kExact:
        out.thresholds[f] = DistinctSorted(column);
        break;
      case Strategy::kRandom:
        out.thresholds[f] =
            SampleLocal(column, {k, seed, StreamId(iteration, f, 0)});
        break;
      case Strategy::kQuantile:
        out.thresholds[f] = ProposeQuantileCandidates(column, {}, k);
        break;
      case Strategy::kWeightedQuantile:
        out.thresholds[f] = ProposeQuantileCandidates(column, hessians, k);
        break;
    }
  });
  return out;
}

void TrainConfig::Validate() const {
  if (bins < 1) throw ConfigError("bins must be at least 1");
  if (iterations < 0) throw ConfigError("iterations must be >= 0");
  if (max_depth < 0) throw ConfigError("max_depth must be >= 0");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("learning rate must be positive and finite");
  }
  if (workers < 1) throw ConfigError("workers must be >= 1");
  params.Validate();
}

double BoostedModel::BaseMargin() const {
  if (objective == Objective::kLogistic) {
    return std::log(base_score / (1.0 - base_score));
  }
  return base_score;
}

double BoostedModel::PredictRaw(std::span<const double> row) const {
  if (row.size() != num_features) {
    throw DataError("row has " + std::to_string(row.size()) +
                    " features, model expects " +
                    std::to_string(num_features));
  }
  double raw = BaseMargin();
  for (const Tree& tree : trees) raw += learning_rate * tree.Predict(row);
  return raw;
}

std::vector<double> BoostedModel::PredictRaw(const Dataset& ds) const {
  if (ds.num_features() != num_features) {
    throw DataError("data has " + std::to_string(ds.num_features()) +
                    " feature columns, model expects " +
                    std::to_string(num_features));
  }
  std::vector<double> raw(ds.num_rows(), BaseMargin());
  for (const Tree& tree : trees) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      raw[i] += learning_rate * tree.Predict(ds, i);
    }
  }
  return raw;
}

std::vector<double> BoostedModel::Predict(const Dataset& ds) const {
  auto out = PredictRaw(ds);
  if (objective == Objective::kLogistic) {
    for (double& v : out) v = Sigmoid(v);
  }
  return out;
}

bool operator==(const BoostedModel& a, const BoostedModel& b) {
  const auto cfg = [](const TrainConfig& c) {
    return std::tuple(c.objective, c.strategy, c.bins, c.iterations,
                      c.max_depth, c.learning_rate, c.params.lambda,
                      c.params.gamma, c.params.min_child_weight, c.seed,
                      c.workers);
  };
  return a.objective == b.objective && a.learning_rate == b.learning_rate &&
         a.base_score == b.base_score && a.num_features == b.num_features &&
         a.trees == b.trees && cfg(a.config) == cfg(b.config);
}

std::string_view TrainMetricName(Objective objective) {
  return objective == Objective::kLogistic ? "accuracy" : "rmse";
}

MetricSums AccumulateMetric(Objective objective, std::span<const double> raw,
                            std::span<const double> labels) {
  MetricSums sums;
  sums.count = raw.size();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (objective == Objective::kLogistic) {
      const double predicted = raw[i] >= 0.0 ? 1.0 : 0.0;
      if (predicted == labels[i]) sums.sum += 1.0;
    } else {
      const double r = raw[i] - labels[i];
      sums.sum += r * r;
    }
  }
  return sums;
}

double FinishMetric(Objective objective, const MetricSums& sums) {
  if (sums.count == 0) return 0.0;
  const double mean = sums.sum / static_cast<double>(sums.count);
  return objective == Objective::kLogistic ? mean : std::sqrt(mean);
}

double TrainMetric(Objective objective, std::span<const double> raw,
                   std::span<const double> labels) {
  return FinishMetric(objective, AccumulateMetric(objective, raw, labels));
}

TrainResult Train(const Dataset& ds, const TrainConfig& config) {
  config.Validate();
  if (config.workers > 1) return TrainDistributed(ds, config).result;

  const int threads = ResolveThreads(config.threads);
  TrainResult result;
  BoostedModel& model = result.model;
  model.objective = config.objective;
  model.learning_rate = config.learning_rate;
  model.base_score = kDefaultBaseScore;
  model.num_features = ds.num_features();
  model.config = config;
  result.metric_name = std::string(TrainMetricName(config.objective));

  std::vector<std::size_t> rows(ds.num_rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::vector<double> raw(ds.num_rows(), model.BaseMargin());

  for (int it = 0; it < config.iterations; ++it) {
    const auto grads = ComputeGradients(raw, ds.labels(), config.objective);

    const auto proposal_start = std::chrono::steady_clock::now();
    const CandidateSet candidates =
        ProposeCandidates(ds, grads, config.strategy, config.bins, config.seed,
                          static_cast<std::uint64_t>(it), threads);
    const double proposal_ms = MillisSince(proposal_start);

    const auto grow_start = std::chrono::steady_clock::now();
    TreeGrower grower(ds, rows, grads, candidates, config.max_depth,
                      config.params, threads);
    while (!grower.Done()) grower.ApplyLevel(grower.LocalHistograms());
    const double histogram_ms = MillisSince(grow_start);

    const Tree& tree = grower.tree();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      raw[i] += config.learning_rate * tree.Predict(ds, i);
    }
    model.trees.push_back(tree);
    result.log.push_back({it + 1,
                          TrainMetric(config.objective, raw, ds.labels()),
                          proposal_ms, histogram_ms});
  }
  return result;
}

}  // namespace sboost
