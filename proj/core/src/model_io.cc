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

#include "sboost/model_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sboost/error.h"

namespace sboost {
namespace {

using Json = nlohmann::ordered_json;

// Field access with JSON-pointer style paths in error messages.
class Field {
 public:
  Field(const Json& node, std::string path)
      : node_(node), path_(std::move(path)) {}

  Field operator[](const char* key) const {
    if (!node_.is_object()) fail("expected an object");
    const auto it = node_.find(key);
    if (it == node_.end()) {
      throw SchemaError(path_ + "/" + key, "missing field");
    }
    return Field(*it, path_ + "/" + key);
  }
  Field operator[](std::size_t index) const {
    return Field(node_.at(index), path_ + "/" + std::to_string(index));
  }
  bool has(const char* key) const {
    return node_.is_object() && node_.contains(key);
  }

  double number() const {
    if (!node_.is_number()) fail("expected a number");
    return node_.get<double>();
  }
  std::int64_t integer() const {
    if (!node_.is_number_integer()) fail("expected an integer");
    return node_.get<std::int64_t>();
  }
  std::uint64_t unsigned_integer() const {
    if (!node_.is_number_unsigned() &&
        !(node_.is_number_integer() && node_.get<std::int64_t>() >= 0)) {
      fail("expected a non-negative integer");
    }
    return node_.get<std::uint64_t>();
  }
  std::string string() const {
    if (!node_.is_string()) fail("expected a string");
    return node_.get<std::string>();
  }
  std::size_t array_size() const {
    if (!node_.is_array()) fail("expected an array");
    return node_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError(path_.empty() ? "/" : path_, what);
  }

 private:
  const Json& node_;
  std::string path_;
};

template <typename Fn>
auto Guard(const Field& f, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    f.fail(e.what());
  }
}

}  // namespace

std::string ModelToJson(const BoostedModel& model) {
  const TrainConfig& c = model.config;
  Json doc;
  doc["format"] = kModelFormat;
  doc["version"] = kModelVersion;
  doc["objective"] = std::string(ObjectiveName(model.objective));
  doc["learning_rate"] = model.learning_rate;
  doc["base_score"] = model.base_score;
  doc["num_features"] = model.num_features;
  doc["split_rule"] = "value < threshold goes left";
  doc["config"] = {
      {"strategy", std::string(StrategyName(c.strategy))},
      {"bins", c.bins},
      {"seed", c.seed},
      {"iterations", c.iterations},
      {"max_depth", c.max_depth},
      {"learning_rate", c.learning_rate},
      {"lambda", c.params.lambda},
      {"gamma", c.params.gamma},
      {"min_child_weight", c.params.min_child_weight},
      {"workers", c.workers},
  };
  Json trees = Json::array();
  for (const Tree& tree : model.trees) {
    Json nodes = Json::array();
    for (const TreeNode& n : tree.nodes) {
      if (n.is_leaf()) {
        nodes.push_back({{"leaf", n.weight}});
      } else {
        nodes.push_back({{"feature", n.feature},
                         {"threshold", n.threshold},
                         {"left", n.left},
                         {"right", n.right}});
      }
    }
    trees.push_back({{"nodes", std::move(nodes)}});
  }
  doc["trees"] = std::move(trees);
  return doc.dump(1) + "\n";
}

BoostedModel ModelFromJson(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("/", std::string("not a valid JSON document: ") +
                               e.what());
  }
  const Field root(doc, "");
  if (root["format"].string() != kModelFormat) {
    root["format"].fail("not an sboost model document");
  }
  const std::string version = root["version"].string();
  if (version != kModelVersion) {
    root["version"].fail("unsupported model version '" + version +
                         "' (this build reads version " + kModelVersion + ")");
  }

  BoostedModel model;
  model.objective = Guard(root["objective"], [&] {
    return ParseObjective(root["objective"].string());
  });
  model.learning_rate = root["learning_rate"].number();
  model.base_score = root["base_score"].number();
  if (!(model.base_score > 0.0 && model.base_score < 1.0) &&
      model.objective == Objective::kLogistic) {
    root["base_score"].fail("logistic base score must lie in (0, 1)");
  }
  model.num_features = root["num_features"].unsigned_integer();

  const Field cfg = root["config"];
  TrainConfig& c = model.config;
  c.objective = model.objective;
  c.strategy = Guard(cfg["strategy"],
                     [&] { return ParseStrategy(cfg["strategy"].string()); });
  c.bins = cfg["bins"].unsigned_integer();
  c.seed = cfg["seed"].unsigned_integer();
  c.iterations = static_cast<int>(cfg["iterations"].integer());
  c.max_depth = static_cast<int>(cfg["max_depth"].integer());
  c.learning_rate = cfg["learning_rate"].number();
  c.params.lambda = cfg["lambda"].number();
  c.params.gamma = cfg["gamma"].number();
  c.params.min_child_weight = cfg["min_child_weight"].number();
  c.workers = static_cast<int>(cfg["workers"].integer());

  const Field trees = root["trees"];
  const std::size_t num_trees = trees.array_size();
  model.trees.resize(num_trees);
  for (std::size_t t = 0; t < num_trees; ++t) {
    const Field nodes = trees[t]["nodes"];
    const std::size_t num_nodes = nodes.array_size();
    if (num_nodes == 0) nodes.fail("tree has no nodes");
    auto& out = model.trees[t].nodes;
    out.resize(num_nodes);
    for (std::size_t i = 0; i < num_nodes; ++i) {
      const Field node = nodes[i];
      TreeNode& n = out[i];
      if (node.has("leaf")) {
        n.weight = node["leaf"].number();
        continue;
      }
      const auto feature = node["feature"].integer();
      if (feature < 0 ||
          static_cast<std::uint64_t>(feature) >= model.num_features) {
        node["feature"].fail("feature index out of range");
      }
      n.feature = static_cast<int>(feature);
      n.threshold = node["threshold"].number();
      const auto left = node["left"].integer();
      const auto right = node["right"].integer();
      // Children always follow their parent in level order.
      const auto in_range = [&](std::int64_t id) {
        return id > static_cast<std::int64_t>(i) &&
               id < static_cast<std::int64_t>(num_nodes);
      };
      if (!in_range(left)) node["left"].fail("child id out of range");
      if (!in_range(right)) node["right"].fail("child id out of range");
      n.left = static_cast<int>(left);
      n.right = static_cast<int>(right);
    }
  }
  return model;
}

void SaveModel(const BoostedModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write model file " + path.string());
  out << ModelToJson(model);
  if (!out) throw DataError("write failed for " + path.string());
}

BoostedModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open model file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ModelFromJson(text.str());
}

}  // namespace sboost
