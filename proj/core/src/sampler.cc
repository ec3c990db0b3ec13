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

#include "sboost/sampler.h"

#include <algorithm>
#include <unordered_set>

#include "sboost/error.h"

namespace sboost {

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t StreamId(std::uint64_t iteration, std::uint64_t feature,
                       std::uint64_t worker) {
  return Mix64(Mix64(Mix64(iteration) ^ feature) ^ worker);
}

std::mt19937_64 MakeRng(std::uint64_t seed, std::uint64_t stream_id) {
  return std::mt19937_64(Mix64(seed ^ Mix64(stream_id)));
}

std::vector<std::size_t> SamplePositions(std::size_t n, std::size_t k,
                                         std::mt19937_64& rng) {
  k = std::min(k, n);
  std::vector<std::size_t> out;
  out.reserve(k);
  if (k == n) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(i);
    return out;
  }
  std::unordered_set<std::size_t> chosen;
  chosen.reserve(2 * k);
  for (std::size_t j = n - k; j < n; ++j) {
    std::uniform_int_distribution<std::size_t> pick(0, j);
    const std::size_t t = pick(rng);
    const std::size_t take = chosen.insert(t).second ? t : j;
    if (take == j) chosen.insert(j);
    out.push_back(take);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> SampleLocal(std::span<const double> column,
                                const SamplerConfig& cfg) {
  if (column.empty()) throw ConfigError("cannot sample an empty column");
  if (cfg.k == 0) throw ConfigError("candidate count k must be at least 1");
  auto rng = MakeRng(cfg.seed, cfg.stream_id);
  const auto positions = SamplePositions(column.size(), cfg.k, rng);
  std::vector<double> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(column[p]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> SampleGlobal(
    std::span<const std::vector<double>> worker_samples, std::size_t k,
    std::uint64_t seed) {
  if (k == 0) throw ConfigError("candidate count k must be at least 1");
  std::vector<double> pool;
  for (const auto& s : worker_samples) pool.insert(pool.end(), s.begin(), s.end());
  if (pool.empty()) throw ConfigError("no worker contributed a sample");
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.size() <= k) return pool;

  std::mt19937_64 rng(Mix64(seed));
  const auto positions = SamplePositions(pool.size(), k, rng);
  std::vector<double> out;
  out.reserve(k);
  for (std::size_t p : positions) out.push_back(pool[p]);
  return out;
}

}  // namespace sboost
