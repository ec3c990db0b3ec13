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

#include "sboost/theory.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sboost/error.h"
#include "sboost/sampler.h"

namespace sboost {

RankedObjective::RankedObjective(std::span<const double> scores) {
  order_.resize(scores.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  BuildInverse();
}

RankedObjective RankedObjective::FromOrder(std::vector<std::size_t> order) {
  std::vector<bool> seen(order.size(), false);
  for (std::size_t p : order) {
    if (p >= order.size() || seen[p]) {
      throw ConfigError("ranking is not a permutation");
    }
    seen[p] = true;
  }
  RankedObjective out;
  out.order_ = std::move(order);
  out.BuildInverse();
  return out;
}

RankedObjective RankedObjective::Identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return FromOrder(std::move(order));
}

void RankedObjective::BuildInverse() {
  rank_of_.assign(order_.size(), 0);
  for (std::size_t r = 0; r < order_.size(); ++r) rank_of_[order_[r]] = r;
}

std::size_t RankError(std::span<const std::size_t> subset,
                      const RankedObjective& ranking) {
  if (subset.empty()) throw ConfigError("rank error needs a non-empty subset");
  std::size_t best = ranking.size();
  for (std::size_t p : subset) {
    if (p >= ranking.size()) {
      throw ConfigError("subset position " + std::to_string(p) +
                        " outside ranking of size " +
                        std::to_string(ranking.size()));
    }
    best = std::min(best, ranking.rank_of(p));
  }
  return best;
}

Rational ExpectedRankErrorFormula(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) {
    throw ConfigError("expected rank error needs 1 <= k <= n (n=" +
                      std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  return Rational(n - k, k + 1);
}

std::optional<std::int64_t> Binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Multiplicative form; every prefix product is itself a binomial.
  // Dividing out gcd(value, i) first keeps the exact quotient: i / g must
  // divide (n - k + i) because the result is an integer.
  std::int64_t value = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const std::int64_t g = std::gcd(value, i);
    const std::int64_t factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(value / g, factor, &value)) return std::nullopt;
  }
  return value;
}

RankErrorStat RankErrorExhaustive(std::size_t n, std::size_t k,
                                  const RankedObjective& ranking) {
  if (k < 1 || k > n) throw ConfigError("exhaustive rank error needs 1 <= k <= n");
  if (ranking.size() != n) throw ConfigError("ranking size differs from n");
  const auto count = Binomial(static_cast<std::int64_t>(n),
                              static_cast<std::int64_t>(k));
  if (!count || *count > kExhaustiveLimit) {
    throw ConfigError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") subsets exceed the exhaustive limit of " +
                      std::to_string(kExhaustiveLimit) +
                      "; use the Monte Carlo estimate instead");
  }

  // Lexicographic walk over k-combinations of [0, n).
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  std::int64_t total = 0;
  std::int64_t hits = 0;
  std::int64_t visited = 0;
  while (true) {
    const std::size_t r = RankError(subset, ranking);
    total += static_cast<std::int64_t>(r);
    if (r == 0) ++hits;
    ++visited;

    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }

  RankErrorStat stat;
  stat.n = n;
  stat.k = k;
  stat.trials = 0;
  stat.exact_raw_mean = Rational(total, visited);
  stat.raw_mean = boost::rational_cast<double>(*stat.exact_raw_mean);
  stat.normalized_mean =
      k == n ? 0.0 : stat.raw_mean / static_cast<double>(n - k);
  stat.hit_fraction = static_cast<double>(hits) / static_cast<double>(visited);
  return stat;
}

RankErrorStat RankErrorExhaustive(std::size_t n, std::size_t k) {
  return RankErrorExhaustive(n, k, RankedObjective::Identity(n));
}

RankErrorStat RankErrorMonteCarlo(std::size_t n, std::size_t k,
                                  std::uint64_t trials, std::uint64_t seed) {
  if (k < 1 || k > n) throw ConfigError("Monte Carlo rank error needs 1 <= k <= n");
  if (trials < 1) throw ConfigError("Monte Carlo rank error needs trials >= 1");
  RankErrorStat stat;
  stat.n = n;
  stat.k = k;
  stat.trials = trials;
  if (k == n) {
    stat.hit_fraction = 1.0;
    return stat;
  }

  const double worst = static_cast<double>(n - k);
  std::mt19937_64 rng(Mix64(seed));
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    // Identity ranking: the rank error is the smallest sampled position.
    const auto positions = SamplePositions(n, k, rng);
    const double r = static_cast<double>(positions.front());
    if (positions.front() == 0) ++hits;
    const double e = r / worst;
    sum += e;
    sum_sq += e * e;
  }
  const double m = static_cast<double>(trials);
  stat.normalized_mean = sum / m;
  stat.raw_mean = stat.normalized_mean * worst;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - m * stat.normalized_mean *
                                                  stat.normalized_mean) /
                                         (m - 1.0));
    stat.stderr_normalized = std::sqrt(var / m);
  }
  stat.hit_fraction = static_cast<double>(hits) / m;
  return stat;
}

}  // namespace sboost
