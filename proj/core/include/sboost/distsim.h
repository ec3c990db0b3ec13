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

#ifndef SBOOST_DISTSIM_H_
#define SBOOST_DISTSIM_H_

#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sboost/booster.h"
#include "sboost/data.h"
#include "sboost/error.h"
#include "sboost/quantile.h"

namespace sboost {

enum class ReductionKind {
  kSumHistograms,
  kMergeCandidatesRandom,
  kMergeCandidatesQuantile,
  kMergeCandidatesExact,
  kSumMetric,
};

std::string_view ReductionKindName(ReductionKind kind);

// 64-bit FNV-1a digests of reduced values, used to check that every worker
// observed bit-identical results.
std::uint64_t Digest(const std::vector<NodeHistogram>& hists);
std::uint64_t Digest(const CandidateSet& candidates);
std::uint64_t Digest(const MetricSums& sums);

// In-process AllReduce among `workers` participants.
//
// Each round gathers one contribution per worker. Once the last one arrives
// the round closes and every worker applies the reducer itself to the full,
// worker-id ordered contribution list, then reports a digest of its result.
// Rounds are a barrier: no worker leaves AllReduce() before all have entered.
// T is the contributed type, R the reduced one.
template <typename T, typename R = T>
class AllReduceChannel {
 public:
  using Reducer = std::function<R(std::span<const T>)>;

  AllReduceChannel(int workers, ReductionKind kind)
      : workers_(workers), kind_(kind), slots_(workers) {
    if (workers < 1) throw ConfigError("channel needs at least one worker");
  }

  int workers() const { return workers_; }
  ReductionKind kind() const { return kind_; }

  // Non-blocking contribution to the open round.
  void Contribute(int worker_id, T value) {
    std::lock_guard lock(mu_);
    ContributeLocked(worker_id, std::move(value));
  }

  // Reduces the open round. Throws ProtocolError when a worker has not
  // contributed; on success the round closes and its inputs are returned
  // to the caller's reducer.
  R Collect(const Reducer& reduce) {
    std::shared_ptr<const std::vector<T>> inputs;
    {
      std::lock_guard lock(mu_);
      if (arrived_ != workers_) {
        for (int w = 0; w < workers_; ++w) {
          if (!slots_[w]) {
            throw ProtocolError("AllReduce round " + std::to_string(round_) +
                                " is missing worker " + std::to_string(w));
          }
        }
      }
      inputs = CloseRoundLocked();
    }
    return reduce(*inputs);
  }

  // Blocking collective: contributes, waits for the round to close, reduces.
  R AllReduce(int worker_id, T value, const Reducer& reduce) {
    std::shared_ptr<const std::vector<T>> inputs;
    std::uint64_t round = 0;
    {
      std::unique_lock lock(mu_);
      round = round_;
      ContributeLocked(worker_id, std::move(value));
      if (arrived_ == workers_) {
        inputs = CloseRoundLocked();
        cv_.notify_all();
      } else {
        cv_.wait(lock, [&] { return aborted_ || round_ != round; });
        if (aborted_) throw ProtocolError("AllReduce aborted");
        inputs = closed_;
      }
    }
    R result = reduce(*inputs);
    Record(round, worker_id, Digest(result));
    return result;
  }

  // Wakes every waiter with a ProtocolError (used when a worker fails).
  void Abort() {
    std::lock_guard lock(mu_);
    aborted_ = true;
    cv_.notify_all();
  }

  std::uint64_t rounds_completed() const {
    std::lock_guard lock(mu_);
    return round_;
  }

  // Rounds in which not every worker reported, or the reported digests
  // differ.
  std::size_t AgreementViolations() const {
    std::lock_guard lock(mu_);
    std::size_t bad = 0;
    for (const auto& [round, digests] : digests_) {
      bool ok = digests.size() == static_cast<std::size_t>(workers_);
      for (const auto& d : digests) ok = ok && d && *d == *digests[0];
      if (!ok) ++bad;
    }
    return bad;
  }

 private:
  void ContributeLocked(int worker_id, T value) {
    if (worker_id < 0 || worker_id >= workers_) {
      throw ProtocolError("unknown worker id " + std::to_string(worker_id));
    }
    if (slots_[worker_id]) {
      throw ProtocolError("worker " + std::to_string(worker_id) +
                          " contributed twice to round " +
                          std::to_string(round_));
    }
    slots_[worker_id] = std::move(value);
    ++arrived_;
  }

  std::shared_ptr<const std::vector<T>> CloseRoundLocked() {
    auto inputs = std::make_shared<std::vector<T>>();
    inputs->reserve(workers_);
    for (auto& slot : slots_) {
      inputs->push_back(std::move(*slot));
      slot.reset();
    }
    arrived_ = 0;
    ++round_;
    closed_ = inputs;
    return inputs;
  }

  void Record(std::uint64_t round, int worker_id, std::uint64_t digest) {
    std::lock_guard lock(mu_);
    auto& digests = digests_[round];
    digests.resize(workers_);
    digests[worker_id] = digest;
  }

  const int workers_;
  const ReductionKind kind_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::vector<std::optional<T>> slots_;
  int arrived_ = 0;
  std::uint64_t round_ = 0;
  bool aborted_ = false;
  std::shared_ptr<const std::vector<T>> closed_;
  std::map<std::uint64_t, std::vector<std::optional<std::uint64_t>>> digests_;
};

// A worker's proposal for one boosting round, per feature: sampled values
// (random), local distinct values (exact) or a local sketch (quantile).
struct LocalProposal {
  std::vector<std::vector<double>> values;
  std::vector<GkSummary> sketches;
};

// Proposal computed from the rows of one worker.
LocalProposal ProposeLocal(const Dataset& ds,
                           std::span<const std::size_t> rows,
                           std::span<const GradientPair> grads,
                           Strategy strategy, std::size_t k,
                           std::uint64_t seed, std::uint64_t iteration,
                           int worker_id);

// Elementwise sum in ascending worker order. Throws ProtocolError when the
// layouts differ.
std::vector<NodeHistogram> AllReduceHistograms(
    std::span<const std::vector<NodeHistogram>> per_worker);

// random: SampleGlobal over worker samples; quantile variants: merge all
// sketches in worker order, then CandidatesFromSummary; exact: distinct
// union.
CandidateSet AllReduceCandidates(std::span<const LocalProposal> per_worker,
                                 Strategy strategy, std::size_t k,
                                 std::uint64_t seed, std::uint64_t iteration);

struct DistributedStats {
  std::uint64_t candidate_rounds = 0;
  std::uint64_t histogram_rounds = 0;
  std::size_t agreement_violations = 0;  // across all channels
  bool models_identical = false;         // every worker's final model
};

struct DistributedResult {
  TrainResult result;
  DistributedStats stats;
};

// Runs config.workers simulated workers on separate threads over
// Partition(ds, workers, seed).
DistributedResult TrainDistributed(const Dataset& ds,
                                   const TrainConfig& config);

}  // namespace sboost

#endif  // SBOOST_DISTSIM_H_
