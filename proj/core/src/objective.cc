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

#include <cmath>

#include "sboost/error.h"

namespace sboost {
namespace {

double ScoreTerm(double g, double h, double lambda) {
  const double denom = h + lambda;
  return denom == 0.0 ? 0.0 : g * g / denom;
}

}  // namespace

std::string_view ObjectiveName(Objective objective) {
  switch (objective) {
    case Objective::kSquaredError:
      return "squared_error";
    case Objective::kLogistic:
      return "logistic";
  }
  return "unknown";
}

Objective ParseObjective(std::string_view name) {
  if (name == "squared_error") return Objective::kSquaredError;
  if (name == "logistic") return Objective::kLogistic;
  throw ConfigError("unknown objective '" + std::string(name) + "'");
}

void GainParams::Validate() const {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ConfigError(std::string(name) + " must be finite and >= 0");
    }
  };
  check(lambda, "lambda");
  check(gamma, "gamma");
  check(min_child_weight, "min_child_weight");
}

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<GradientPair> ComputeGradients(std::span<const double> predictions,
                                           std::span<const double> labels,
                                           Objective objective) {
  if (predictions.size() != labels.size()) {
    throw DataError("prediction/label length mismatch: " +
                    std::to_string(predictions.size()) + " vs " +
                    std::to_string(labels.size()));
  }
  std::vector<GradientPair> out(predictions.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double pred = predictions[i];
    const double label = labels[i];
    if (!std::isfinite(pred) || !std::isfinite(label)) {
      throw DataError("non-finite prediction or label at row " +
                      std::to_string(i));
    }
    if (objective == Objective::kSquaredError) {
      out[i] = {pred - label, 1.0};
    } else {
      if (label != 0.0 && label != 1.0) {
        throw DataError("logistic labels must be 0 or 1 (row " +
                        std::to_string(i) + " has " + std::to_string(label) +
                        ")");
      }
      // 1 - p via the mirrored sigmoid keeps h > 0 for large margins.
      const double p = Sigmoid(pred);
      out[i] = {p - label, p * Sigmoid(-pred)};
    }
  }
  return out;
}

double SplitGain(double left_g, double left_h, double right_g, double right_h,
                 const GainParams& params) {
  const double parent = ScoreTerm(left_g + right_g, left_h + right_h,
                                  params.lambda);
  return 0.5 * (ScoreTerm(left_g, left_h, params.lambda) +
                ScoreTerm(right_g, right_h, params.lambda) - parent) -
         params.gamma;
}

double LeafWeight(double g, double h, const GainParams& params) {
  const double denom = h + params.lambda;
  return denom == 0.0 ? 0.0 : -g / denom;
}

}  // namespace sboost
