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

#include "sboost/objective.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sboost/error.h"

namespace sboost {
namespace {

TEST(Gradients, SquaredError) {
  const auto g = ComputeGradients(std::vector<double>{3.0},
                                  std::vector<double>{1.0},
                                  Objective::kSquaredError);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].g, 2.0);
  EXPECT_EQ(g[0].h, 1.0);
}

TEST(Gradients, LogisticAtZeroMargin) {
  const auto g = ComputeGradients(std::vector<double>{0.0, 0.0},
                                  std::vector<double>{1.0, 0.0},
                                  Objective::kLogistic);
  EXPECT_DOUBLE_EQ(g[0].g, -0.5);
  EXPECT_DOUBLE_EQ(g[0].h, 0.25);
  EXPECT_DOUBLE_EQ(g[1].g, 0.5);
  EXPECT_DOUBLE_EQ(g[1].h, 0.25);
}

TEST(Gradients, LengthMismatchAndBadLabel) {
  EXPECT_THROW(ComputeGradients(std::vector<double>{0.0},
                                std::vector<double>{}, Objective::kLogistic),
               DataError);
  EXPECT_THROW(ComputeGradients(std::vector<double>{0.0},
                                std::vector<double>{2.0}, Objective::kLogistic),
               DataError);
}

TEST(Gradients, LogisticHessianBound) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> margin(-40.0, 40.0);
  std::vector<double> pred(5000), labels(5000);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    pred[i] = margin(rng);
    labels[i] = static_cast<double>(i % 2);
  }
  pred[0] = 0.0;
  for (const auto& gp : ComputeGradients(pred, labels, Objective::kLogistic)) {
    EXPECT_GT(gp.h, 0.0);
    EXPECT_LE(gp.h, 0.25);
    EXPECT_TRUE(std::isfinite(gp.g));
  }
}

TEST(SplitGain, Examples) {
  const GainParams zero{.lambda = 0.0, .gamma = 0.0, .min_child_weight = 0.0};
  EXPECT_DOUBLE_EQ(SplitGain(1, 1, -1, 1, zero), 1.0);
  const GainParams gamma{.lambda = 1.0, .gamma = 0.7, .min_child_weight = 0.0};
  EXPECT_DOUBLE_EQ(SplitGain(0, 3, 0, 2, gamma), -0.7);
}

// Reference expression written out independently.
double ReferenceGain(double gl, double hl, double gr, double hr, double lambda,
                     double gamma) {
  const double parent = (gl + gr) * (gl + gr) / (hl + hr + lambda);
  return 0.5 * (gl * gl / (hl + lambda) + gr * gr / (hr + lambda) - parent) -
         gamma;
}

TEST(SplitGain, MatchesReferenceOnRandomInputs) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> g(-50.0, 50.0);
  std::uniform_real_distribution<double> h(0.0, 30.0);
  const GainParams p{.lambda = 1.0, .gamma = 0.0, .min_child_weight = 0.0};
  for (int i = 0; i < 10000; ++i) {
    const double gl = g(rng), hl = h(rng), gr = g(rng), hr = h(rng);
    const double want = ReferenceGain(gl, hl, gr, hr, 1.0, 0.0);
    EXPECT_NEAR(SplitGain(gl, hl, gr, hr, p), want,
                1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST(SplitGain, SymmetryAndNullSplit) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> g(-5.0, 5.0);
  std::uniform_real_distribution<double> h(0.0, 5.0);
  for (double lambda : {0.0, 1.0, 3.5}) {
    const GainParams p{.lambda = lambda, .gamma = 0.0, .min_child_weight = 0.0};
    for (int i = 0; i < 1000; ++i) {
      const double gl = g(rng), hl = h(rng), gr = g(rng), hr = h(rng);
      EXPECT_EQ(SplitGain(gl, hl, gr, hr, p), SplitGain(gr, hr, gl, hl, p));
      EXPECT_NEAR(SplitGain(gl, hl, 0.0, 0.0, p), 0.0, 1e-12);
    }
  }
  // 0/0 terms are defined as zero.
  const GainParams p{.lambda = 0.0, .gamma = 0.0, .min_child_weight = 0.0};
  EXPECT_EQ(SplitGain(0, 0, 0, 0, p), 0.0);
}

TEST(LeafWeight, Examples) {
  const GainParams p{.lambda = 1.0, .gamma = 0.0, .min_child_weight = 1.0};
  EXPECT_DOUBLE_EQ(LeafWeight(2, 1, p), -1.0);
  EXPECT_EQ(LeafWeight(0, 1, p), 0.0);
  EXPECT_DOUBLE_EQ(LeafWeight(-3, 0, p), 3.0);
  const GainParams none{.lambda = 0.0, .gamma = 0.0, .min_child_weight = 0.0};
  EXPECT_EQ(LeafWeight(0, 0, none), 0.0);
}

TEST(GainParams, Validate) {
  EXPECT_NO_THROW(GainParams{}.Validate());
  EXPECT_THROW((GainParams{.lambda = -1.0}).Validate(), ConfigError);
  EXPECT_THROW((GainParams{.gamma = -0.1}).Validate(), ConfigError);
  EXPECT_THROW((GainParams{.min_child_weight = NAN}).Validate(), ConfigError);
}

TEST(Objective, NamesRoundTrip) {
  for (Objective o : {Objective::kSquaredError, Objective::kLogistic}) {
    EXPECT_EQ(ParseObjective(ObjectiveName(o)), o);
  }
  EXPECT_THROW(ParseObjective("hinge"), ConfigError);
}

}  // namespace
}  // namespace sboost
