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

#ifndef SBOOST_TREE_H_
#define SBOOST_TREE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "sboost/data.h"

namespace sboost {

// Internal nodes send value < threshold to `left`, everything else to
// `right`. Leaves have feature == -1 and carry `weight`.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double weight = 0.0;

  bool is_leaf() const { return feature < 0; }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// Nodes are stored in level order; node 0 is the root.
struct Tree {
  std::vector<TreeNode> nodes;

  // Leaf output for a row given as a feature accessor.
  template <typename FeatureAt>
  double Evaluate(FeatureAt&& feature_at) const {
    int id = 0;
    while (!nodes[id].is_leaf()) {
      const TreeNode& n = nodes[id];
      id = feature_at(n.feature) < n.threshold ? n.left : n.right;
    }
    return nodes[id].weight;
  }

  double Predict(std::span<const double> row) const {
    return Evaluate([&](int f) { return row[f]; });
  }
  double Predict(const Dataset& ds, std::size_t row) const {
    return Evaluate([&](int f) { return ds.at(row, f); });
  }

  int Depth() const;
  std::size_t NumLeaves() const;

  friend bool operator==(const Tree&, const Tree&) = default;
};

}  // namespace sboost

#endif  // SBOOST_TREE_H_
