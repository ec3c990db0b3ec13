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

#ifndef SBOOST_OBJECTIVE_H_
#define SBOOST_OBJECTIVE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sboost {

enum class Objective { kSquaredError, kLogistic };

std::string_view ObjectiveName(Objective objective);
// Accepts "squared_error" / "logistic"; throws ConfigError otherwise.
Objective ParseObjective(std::string_view name);

// First and second order gradient of the loss for one row.
struct GradientPair {
  double g = 0.0;
  double h = 0.0;

  GradientPair& operator+=(const GradientPair& o) {
    g += o.g;
    h += o.h;
    return *this;
  }
  friend GradientPair operator+(GradientPair a, const GradientPair& b) {
    return a += b;
  }
  friend GradientPair operator-(const GradientPair& a, const GradientPair& b) {
    return {a.g - b.g, a.h - b.h};
  }
  friend bool operator==(const GradientPair&, const GradientPair&) = default;
};

struct GainParams {
  double lambda = 1.0;            // L2 penalty on leaf weights
  double gamma = 0.0;             // penalty per split
  double min_child_weight = 1.0;  // minimum hessian sum in each child

  // Throws ConfigError unless all fields are finite and non-negative.
  void Validate() const;
};

double Sigmoid(double x);

// Per-row gradients of the loss at raw (margin) predictions.
std::vector<GradientPair> ComputeGradients(std::span<const double> predictions,
                                           std::span<const double> labels,
                                           Objective objective);

// Second-order gain of splitting a node into (left, right), minus gamma.
// Terms with a zero denominator count as zero.
double SplitGain(double left_g, double left_h, double right_g, double right_h,
                 const GainParams& params);

// Optimal leaf output -G / (H + lambda); zero when H + lambda == 0.
double LeafWeight(double g, double h, const GainParams& params);

}  // namespace sboost

#endif  // SBOOST_OBJECTIVE_H_
