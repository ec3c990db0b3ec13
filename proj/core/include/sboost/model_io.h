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

#ifndef SBOOST_MODEL_IO_H_
#define SBOOST_MODEL_IO_H_

#include <filesystem>
#include <string>

#include "sboost/booster.h"

namespace sboost {

// Model documents are JSON objects:
//
//   {
//     "format": "sboost-model",
//     "version": "1",
//     "objective": "logistic" | "squared_error",
//     "learning_rate": <number>,
//     "base_score": <number, output space>,
//     "num_features": <integer>,
//     "split_rule": "value < threshold goes left",
//     "config": {"strategy", "bins", "seed", "iterations", "max_depth",
//                "learning_rate", "lambda", "gamma", "min_child_weight",
//                "workers"},
//     "trees": [{"nodes": [{"feature", "threshold", "left", "right"} |
//                          {"leaf": <weight>}, ...]}, ...]
//   }
//
// Node arrays are in level order with the root first. Numbers are written in
// shortest round-trip form, so a save/load cycle reproduces every bit.
inline constexpr const char* kModelFormat = "sboost-model";
inline constexpr const char* kModelVersion = "1";

std::string ModelToJson(const BoostedModel& model);
// Throws SchemaError naming the JSON pointer of the first bad field.
BoostedModel ModelFromJson(const std::string& text);

void SaveModel(const BoostedModel& model, const std::filesystem::path& path);
BoostedModel LoadModel(const std::filesystem::path& path);

}  // namespace sboost

#endif  // SBOOST_MODEL_IO_H_
