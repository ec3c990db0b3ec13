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

// Micro-benchmarks for candidate proposal, histogram construction and the
// sketch merge/prune path.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "sboost/booster.h"
#include "sboost/experiments.h"
#include "sboost/quantile.h"
#include "sboost/sampler.h"

namespace sboost {
namespace {

std::vector<double> UniformColumn(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

std::vector<double> Hessians(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.01, 0.25);
  std::vector<double> h(n);
  for (double& x : h) x = u(rng);
  return h;
}

void BM_SampleLocal(benchmark::State& state) {
  const auto column = UniformColumn(static_cast<std::size_t>(state.range(0)), 1);
  SamplerConfig cfg;
  cfg.k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    ++cfg.stream_id;
    benchmark::DoNotOptimize(SampleLocal(column, cfg));
  }
}
BENCHMARK(BM_SampleLocal)->ArgsProduct({{10000, 100000}, {10, 100, 1000}});

void BM_ProposeQuantile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto column = UniformColumn(n, 1);
  const auto hess = Hessians(n, 2);
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ProposeQuantileCandidates(column, hess, k));
  }
}
BENCHMARK(BM_ProposeQuantile)->ArgsProduct({{10000, 100000}, {10, 100, 1000}});

// Whole-dataset proposal as used in one boosting round.
void BM_ProposeCandidates(benchmark::State& state) {
  const Dataset ds = MakeGaussianClassification(10000, 20, 3);
  std::vector<GradientPair> grads(ds.num_rows());
  const auto hess = Hessians(ds.num_rows(), 4);
  for (std::size_t i = 0; i < grads.size(); ++i) grads[i] = {0.5, hess[i]};
  const auto strategy = static_cast<Strategy>(state.range(0));
  std::uint64_t round = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ProposeCandidates(ds, grads, strategy, 100, 42, round++));
  }
  state.SetLabel(std::string(StrategyName(strategy)));
}
BENCHMARK(BM_ProposeCandidates)
    ->Arg(static_cast<int>(Strategy::kRandom))
    ->Arg(static_cast<int>(Strategy::kQuantile))
    ->Arg(static_cast<int>(Strategy::kWeightedQuantile))
    ->Unit(benchmark::kMillisecond);

void BM_BuildHistogram(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto column = UniformColumn(n, 5);
  std::vector<double> candidates(static_cast<std::size_t>(state.range(1)));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    candidates[i] = static_cast<double>(i + 1) / (candidates.size() + 1);
  }
  std::vector<GradientPair> grads(n, GradientPair{0.1, 0.2});
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildHistogram(rows, column, candidates, grads));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_BuildHistogram)->ArgsProduct({{10000, 100000}, {10, 100, 1000}});

void BM_GkMergePrune(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const double eps = 1.0 / static_cast<double>(k);
  std::vector<GkSummary> parts;
  for (std::uint64_t w = 0; w < 4; ++w) {
    parts.push_back(GkBuild(UniformColumn(25000, 10 + w), {}, eps / 2));
  }
  for (auto _ : state) {
    GkSummary merged = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
      merged = GkMerge(merged, parts[i]);
    }
    benchmark::DoNotOptimize(GkPrune(merged, k));
  }
}
BENCHMARK(BM_GkMergePrune)->Arg(10)->Arg(100)->Arg(1000);

}  // namespace
}  // namespace sboost

BENCHMARK_MAIN();
