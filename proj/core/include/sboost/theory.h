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

#ifndef SBOOST_THEORY_H_
#define SBOOST_THEORY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace sboost {

using Rational = boost::rational<std::int64_t>;

// Candidate positions ranked by descending score. order[r] is the position
// holding rank r (rank 0 is the best); rank_of is its inverse. Equal scores
// rank the lower position first.
class RankedObjective {
 public:
  explicit RankedObjective(std::span<const double> scores);
  // Uses `order` directly; throws ConfigError unless it is a permutation.
  static RankedObjective FromOrder(std::vector<std::size_t> order);
  static RankedObjective Identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t rank_of(std::size_t position) const { return rank_of_[position]; }

 private:
  RankedObjective() = default;
  void BuildInverse();

  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_of_;
};

struct RankErrorStat {
  std::size_t n = 0;
  std::size_t k = 0;
  double raw_mean = 0.0;
  double normalized_mean = 0.0;  // raw_mean / (n - k); 0 when k == n
  double stderr_normalized = 0.0;
  std::uint64_t trials = 0;      // 0 for exhaustive enumeration
  double hit_fraction = 0.0;     // fraction of subsets containing rank 0
  std::optional<Rational> exact_raw_mean;
};

// Best (smallest) rank among the positions in `subset`. Throws ConfigError
// for an empty subset or a position outside the ranking.
std::size_t RankError(std::span<const std::size_t> subset,
                      const RankedObjective& ranking);

// (n - k) / (k + 1). Requires 1 <= k <= n.
Rational ExpectedRankErrorFormula(std::int64_t n, std::int64_t k);

// Exact binomial coefficient; nullopt when it does not fit in int64.
std::optional<std::int64_t> Binomial(std::int64_t n, std::int64_t k);

inline constexpr std::int64_t kExhaustiveLimit = 10'000'000;

// Mean rank error over every k-subset of n positions, in exact rational
// arithmetic. Throws ConfigError if C(n, k) exceeds kExhaustiveLimit.
RankErrorStat RankErrorExhaustive(std::size_t n, std::size_t k,
                                  const RankedObjective& ranking);
RankErrorStat RankErrorExhaustive(std::size_t n, std::size_t k);

// Mean rank error over `trials` uniformly drawn k-subsets. The rank error
// distribution does not depend on which ranking is used, so the identity
// ranking is used.
RankErrorStat RankErrorMonteCarlo(std::size_t n, std::size_t k,
                                  std::uint64_t trials, std::uint64_t seed);

}  // namespace sboost

#endif  // SBOOST_THEORY_H_
