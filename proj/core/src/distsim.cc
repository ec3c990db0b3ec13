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

#include "sboost/distsim.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <exception>
#include <thread>

#include "sboost/sampler.h"

namespace sboost {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;
// Pseudo worker id for the substream used by global resampling.
constexpr std::uint64_t kGlobalStream = ~std::uint64_t{0};

class Fnv {
 public:
  template <typename T>
  void Add(const T& v) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &v, sizeof(T));
    for (unsigned char b : bytes) hash_ = (hash_ ^ b) * kFnvPrime;
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = kFnvOffset;
};

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

ReductionKind CandidateReduction(Strategy strategy) {
  switch (strategy) {
    case Strategy::kRandom:
      return ReductionKind::kMergeCandidatesRandom;
    case Strategy::kExact:
      return ReductionKind::kMergeCandidatesExact;
    default:
      return ReductionKind::kMergeCandidatesQuantile;
  }
}

}  // namespace

std::string_view ReductionKindName(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kSumHistograms:
      return "sum_histograms";
    case ReductionKind::kMergeCandidatesRandom:
      return "merge_candidates_random";
    case ReductionKind::kMergeCandidatesQuantile:
      return "merge_candidates_quantile";
    case ReductionKind::kMergeCandidatesExact:
      return "merge_candidates_exact";
    case ReductionKind::kSumMetric:
      return "sum_metric";
  }
  return "unknown";
}

std::uint64_t Digest(const std::vector<NodeHistogram>& hists) {
  Fnv fnv;
  fnv.Add(hists.size());
  for (const auto& h : hists) {
    fnv.Add(h.total.g);
    fnv.Add(h.total.h);
    fnv.Add(h.count);
    fnv.Add(h.features.size());
    for (const auto& f : h.features) {
      fnv.Add(f.size());
      for (const auto& bin : f) {
        fnv.Add(bin.sum_g);
        fnv.Add(bin.sum_h);
        fnv.Add(bin.count);
      }
    }
  }
  return fnv.value();
}

std::uint64_t Digest(const CandidateSet& candidates) {
  Fnv fnv;
  fnv.Add(candidates.k);
  fnv.Add(candidates.thresholds.size());
  for (const auto& t : candidates.thresholds) {
    fnv.Add(t.size());
    for (double v : t) fnv.Add(v);
  }
  return fnv.value();
}

std::uint64_t Digest(const MetricSums& sums) {
  Fnv fnv;
  fnv.Add(sums.sum);
  fnv.Add(sums.count);
  return fnv.value();
}

LocalProposal ProposeLocal(const Dataset& ds,
                           std::span<const std::size_t> rows,
                           std::span<const GradientPair> grads,
                           Strategy strategy, std::size_t k,
                           std::uint64_t seed, std::uint64_t iteration,
                           int worker_id) {
  if (k == 0) throw ConfigError("bins must be at least 1");
  if (rows.empty()) throw ConfigError("worker has no rows");
  LocalProposal out;
  std::vector<double> hessians;
  if (strategy == Strategy::kWeightedQuantile) {
    hessians.resize(grads.size());
    for (std::size_t p = 0; p < grads.size(); ++p) hessians[p] = grads[p].h;
  }
  const bool sketch = strategy == Strategy::kQuantile ||
                      strategy == Strategy::kWeightedQuantile;
  if (sketch) {
    out.sketches.resize(ds.num_features());
  } else {
    out.values.resize(ds.num_features());
  }

  std::vector<double> local(rows.size());
  for (std::size_t f = 0; f < ds.num_features(); ++f) {
    const auto column = ds.column(f);
    for (std::size_t p = 0; p < rows.size(); ++p) local[p] = column[rows[p]];
    switch (strategy) {
      case Strategy::kExact: {
        auto& v = out.values[f];
        v = local;
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        break;
      }
      case Strategy::kRandom:
        out.values[f] = SampleLocal(
            local, {k, seed, StreamId(iteration, f,
                                      static_cast<std::uint64_t>(worker_id))});
        break;
      case Strategy::kQuantile:
      case Strategy::kWeightedQuantile:
        out.sketches[f] = GkBuild(local, hessians, QuantileEps(k));
        break;
    }
  }
  return out;
}

std::vector<NodeHistogram> AllReduceHistograms(
    std::span<const std::vector<NodeHistogram>> per_worker) {
  if (per_worker.empty()) throw ProtocolError("no histogram contributions");
  std::vector<NodeHistogram> out = per_worker[0];
  for (std::size_t w = 1; w < per_worker.size(); ++w) {
    if (per_worker[w].size() != out.size()) {
      throw ProtocolError("worker " + std::to_string(w) + " sent " +
                          std::to_string(per_worker[w].size()) +
                          " node histograms, expected " +
                          std::to_string(out.size()));
    }
    for (std::size_t n = 0; n < out.size(); ++n) out[n] += per_worker[w][n];
  }
  return out;
}

CandidateSet AllReduceCandidates(std::span<const LocalProposal> per_worker,
                                 Strategy strategy, std::size_t k,
                                 std::uint64_t seed, std::uint64_t iteration) {
  if (per_worker.empty()) throw ProtocolError("no candidate contributions");
  const bool sketch = strategy == Strategy::kQuantile ||
                      strategy == Strategy::kWeightedQuantile;
  const std::size_t features = sketch ? per_worker[0].sketches.size()
                                      : per_worker[0].values.size();
  for (const auto& p : per_worker) {
    if ((sketch ? p.sketches.size() : p.values.size()) != features) {
      throw ProtocolError("candidate proposals disagree on feature count");
    }
  }

  CandidateSet out;
  out.k = k;
  out.thresholds.resize(features);
  std::vector<std::vector<double>> lists(per_worker.size());
  for (std::size_t f = 0; f < features; ++f) {
    if (sketch) {
      GkSummary merged = per_worker[0].sketches[f];
      for (std::size_t w = 1; w < per_worker.size(); ++w) {
        merged = GkMerge(merged, per_worker[w].sketches[f]);
      }
      out.thresholds[f] = CandidatesFromSummary(merged, k);
      continue;
    }
    for (std::size_t w = 0; w < per_worker.size(); ++w) {
      lists[w] = per_worker[w].values[f];
    }
    if (strategy == Strategy::kRandom) {
      out.thresholds[f] =
          SampleGlobal(lists, k, seed ^ StreamId(iteration, f, kGlobalStream));
    } else {
      auto& v = out.thresholds[f];
      v.clear();
      for (const auto& l : lists) v.insert(v.end(), l.begin(), l.end());
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }
  return out;
}

DistributedResult TrainDistributed(const Dataset& ds,
                                   const TrainConfig& config) {
  config.Validate();
  const int workers = config.workers;
  const auto parts = Partition(ds, workers, config.seed);

  AllReduceChannel<LocalProposal, CandidateSet> candidate_channel(
      workers, CandidateReduction(config.strategy));
  AllReduceChannel<std::vector<NodeHistogram>> histogram_channel(
      workers, ReductionKind::kSumHistograms);
  AllReduceChannel<MetricSums> metric_channel(workers,
                                              ReductionKind::kSumMetric);
  auto abort_all = [&] {
    candidate_channel.Abort();
    histogram_channel.Abort();
    metric_channel.Abort();
  };

  const auto reduce_candidates = [&](std::uint64_t it) {
    return [&, it](std::span<const LocalProposal> in) {
      return AllReduceCandidates(in, config.strategy, config.bins, config.seed,
                                 it);
    };
  };
  const auto reduce_histograms =
      [](std::span<const std::vector<NodeHistogram>> in) {
        return AllReduceHistograms(in);
      };
  const auto reduce_metric = [](std::span<const MetricSums> in) {
    MetricSums total = in[0];
    for (std::size_t w = 1; w < in.size(); ++w) {
      total.sum += in[w].sum;
      total.count += in[w].count;
    }
    return total;
  };

  auto run_worker = [&](int id) {
    const auto& rows = parts[id].row_indices;
    TrainResult out;
    BoostedModel& model = out.model;
    model.objective = config.objective;
    model.learning_rate = config.learning_rate;
    model.base_score = kDefaultBaseScore;
    model.num_features = ds.num_features();
    model.config = config;
    out.metric_name = std::string(TrainMetricName(config.objective));

    std::vector<double> labels(rows.size());
    for (std::size_t p = 0; p < rows.size(); ++p) labels[p] = ds.labels()[rows[p]];
    std::vector<double> raw(rows.size(), model.BaseMargin());

    for (int it = 0; it < config.iterations; ++it) {
      const auto iteration = static_cast<std::uint64_t>(it);
      const auto grads = ComputeGradients(raw, labels, config.objective);

      const auto proposal_start = std::chrono::steady_clock::now();
      LocalProposal proposal =
          ProposeLocal(ds, rows, grads, config.strategy, config.bins,
                       config.seed, iteration, id);
      const CandidateSet candidates = candidate_channel.AllReduce(
          id, std::move(proposal), reduce_candidates(iteration));
      const double proposal_ms = MillisSince(proposal_start);

      const auto grow_start = std::chrono::steady_clock::now();
      TreeGrower grower(ds, rows, grads, candidates, config.max_depth,
                        config.params, 1);
      while (!grower.Done()) {
        grower.ApplyLevel(histogram_channel.AllReduce(
            id, grower.LocalHistograms(), reduce_histograms));
      }
      const double histogram_ms = MillisSince(grow_start);

      const Tree& tree = grower.tree();
      for (std::size_t p = 0; p < rows.size(); ++p) {
        raw[p] += config.learning_rate * tree.Predict(ds, rows[p]);
      }
      model.trees.push_back(tree);
      const MetricSums sums = metric_channel.AllReduce(
          id, AccumulateMetric(config.objective, raw, labels), reduce_metric);
      out.log.push_back({it + 1, FinishMetric(config.objective, sums),
                         proposal_ms, histogram_ms});
    }
    return out;
  };

  std::vector<TrainResult> outputs(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (int id = 0; id < workers; ++id) {
      threads.emplace_back([&, id] {
        try {
          outputs[id] = run_worker(id);
        } catch (...) {
          errors[id] = std::current_exception();
          abort_all();
        }
      });
    }
  }
  // Report the root cause rather than the aborts it triggered elsewhere.
  for (const auto& e : errors) {
    if (!e) continue;
    try {
      std::rethrow_exception(e);
    } catch (const ProtocolError&) {
      continue;
    } catch (...) {
      throw;
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  DistributedResult result;
  result.stats.candidate_rounds = candidate_channel.rounds_completed();
  result.stats.histogram_rounds = histogram_channel.rounds_completed();
  result.stats.agreement_violations =
      candidate_channel.AgreementViolations() +
      histogram_channel.AgreementViolations() +
      metric_channel.AgreementViolations();
  result.stats.models_identical = std::all_of(
      outputs.begin(), outputs.end(),
      [&](const TrainResult& r) { return r.model == outputs[0].model; });
  result.result = std::move(outputs[0]);
  return result;
}

}  // namespace sboost
