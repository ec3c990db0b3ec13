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

#ifndef SBOOST_SAMPLER_H_
#define SBOOST_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace sboost {

// Mixes a 64-bit value (splitmix64 finalizer).
std::uint64_t Mix64(std::uint64_t x);

// Independent, reproducible substream id for one (round, feature, worker).
std::uint64_t StreamId(std::uint64_t iteration, std::uint64_t feature,
                       std::uint64_t worker);

struct SamplerConfig {
  std::size_t k = 100;  // candidates per feature
  std::uint64_t seed = 42;
  std::uint64_t stream_id = 0;
};

// Generator for a (seed, stream) pair.
std::mt19937_64 MakeRng(std::uint64_t seed, std::uint64_t stream_id);

// min(k, n) distinct positions from [0, n), uniformly without replacement,
// returned in ascending order (Floyd's algorithm, O(k) draws).
std::vector<std::size_t> SamplePositions(std::size_t n, std::size_t k,
                                         std::mt19937_64& rng);

// Values at min(k, n) uniformly drawn row positions, sorted and
// de-duplicated. Throws ConfigError on an empty column or k == 0.
std::vector<double> SampleLocal(std::span<const double> column,
                                const SamplerConfig& cfg);

// Distinct union of the worker samples; when it exceeds k values, k of them
// are drawn uniformly without replacement. Result is sorted.
// Throws ConfigError when every list is empty.
std::vector<double> SampleGlobal(
    std::span<const std::vector<double>> worker_samples, std::size_t k,
    std::uint64_t seed);

}  // namespace sboost

#endif  // SBOOST_SAMPLER_H_
