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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles/rank_error_sum.h"
#include "sboost/error.h"

namespace sboost {
namespace {

TEST(RankedObjective, OrderAndTies) {
  const RankedObjective r(std::vector<double>{0.5, 2.0, 2.0, -1.0});
  EXPECT_EQ(r.order(), (std::vector<std::size_t>{1, 2, 0, 3}));
  EXPECT_EQ(r.rank_of(0), 2u);
  EXPECT_THROW(RankedObjective::FromOrder({0, 0, 1}), ConfigError);
}

TEST(RankError, Examples) {
  const RankedObjective r = RankedObjective::FromOrder({4, 2, 0, 1, 3});
  EXPECT_EQ(RankError(std::vector<std::size_t>{1, 4}, r), 0u);
  // Bottom k positions: ranks 3 and 4.
  EXPECT_EQ(RankError(std::vector<std::size_t>{1, 3}, r), 3u);
  EXPECT_THROW(RankError(std::vector<std::size_t>{}, r), ConfigError);
  EXPECT_THROW(RankError(std::vector<std::size_t>{7}, r), ConfigError);
}

TEST(RankError, MatchesLinearScan) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t k = 1 + rng() % n;
    std::vector<std::size_t> subset(n);
    std::iota(subset.begin(), subset.end(), std::size_t{0});
    std::shuffle(subset.begin(), subset.end(), rng);
    subset.resize(k);
    // Scan the ranking from the top until a member of S shows up.
    std::size_t expected = 0;
    while (std::find(subset.begin(), subset.end(), order[expected]) ==
           subset.end()) {
      ++expected;
    }
    EXPECT_EQ(RankError(subset, RankedObjective::FromOrder(order)), expected);
  }
}

TEST(Formula, Examples) {
  EXPECT_EQ(ExpectedRankErrorFormula(10, 3), Rational(7, 4));
  EXPECT_EQ(ExpectedRankErrorFormula(6, 6), Rational(0));
  EXPECT_EQ(ExpectedRankErrorFormula(10, 9), Rational(1, 10));
  EXPECT_THROW(ExpectedRankErrorFormula(3, 4), ConfigError);
  EXPECT_THROW(ExpectedRankErrorFormula(3, 0), ConfigError);
}

TEST(Binomial, ValuesAndOverflow) {
  EXPECT_EQ(Binomial(10, 3), 120);
  EXPECT_EQ(Binomial(5, 0), 1);
  EXPECT_EQ(Binomial(5, 6), 0);
  EXPECT_EQ(Binomial(62, 31), 465428353255261088LL);
  // C(67, 33) = 14226520737620288370 exceeds int64.
  EXPECT_FALSE(Binomial(67, 33).has_value());
}

TEST(Exhaustive, Examples) {
  const RankErrorStat s = RankErrorExhaustive(10, 3);
  ASSERT_TRUE(s.exact_raw_mean);
  EXPECT_EQ(*s.exact_raw_mean, Rational(7, 4));
  EXPECT_DOUBLE_EQ(s.raw_mean, 1.75);
  EXPECT_DOUBLE_EQ(s.normalized_mean, 0.25);
  EXPECT_DOUBLE_EQ(s.hit_fraction, 0.3);
  EXPECT_EQ(*RankErrorExhaustive(5, 5).exact_raw_mean, Rational(0));
}

TEST(Exhaustive, AgreesWithFormulaAndSumUpToTwelve) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const auto s = RankErrorExhaustive(static_cast<std::size_t>(n),
                                         static_cast<std::size_t>(k));
      EXPECT_EQ(*s.exact_raw_mean, ExpectedRankErrorFormula(n, k))
          << n << "," << k;
      EXPECT_EQ(*s.exact_raw_mean, oracle::ExpectedBestRank(n, k))
          << n << "," << k;
      EXPECT_GE(s.raw_mean, 0.0);
      EXPECT_LE(s.raw_mean, static_cast<double>(n - k));
    }
  }
}

TEST(Exhaustive, RankingInvariance) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> order(9);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const auto s =
        RankErrorExhaustive(9, 4, RankedObjective::FromOrder(order));
    EXPECT_EQ(*s.exact_raw_mean, Rational(1));
  }
}

TEST(Exhaustive, Guard) {
  EXPECT_THROW(RankErrorExhaustive(60, 30), ConfigError);
  EXPECT_THROW(RankErrorExhaustive(5, 0), ConfigError);
}

TEST(MonteCarlo, MatchesReciprocalLaw) {
  const RankErrorStat s = RankErrorMonteCarlo(1000, 10, 10000, 5);
  EXPECT_EQ(s.trials, 10000u);
  EXPECT_GT(s.stderr_normalized, 0.0);
  EXPECT_LE(std::abs(s.normalized_mean - 1.0 / 11.0), 3 * s.stderr_normalized);
  // R = 0 exactly when the optimum is sampled: probability k/n.
  const double hit_se = std::sqrt(0.01 * 0.99 / 10000.0);
  EXPECT_LE(std::abs(s.hit_fraction - 0.01), 3 * hit_se);
}

TEST(MonteCarlo, FullSubsetIsExact) {
  const RankErrorStat s = RankErrorMonteCarlo(50, 50, 100, 1);
  EXPECT_EQ(s.raw_mean, 0.0);
  EXPECT_EQ(s.stderr_normalized, 0.0);
}

TEST(MonteCarlo, AgreesWithExhaustive) {
  const RankErrorStat mc = RankErrorMonteCarlo(12, 4, 20000, 9);
  const RankErrorStat ex = RankErrorExhaustive(12, 4);
  EXPECT_LE(std::abs(mc.normalized_mean - ex.normalized_mean),
            3 * mc.stderr_normalized);
}

}  // namespace
}  // namespace sboost
