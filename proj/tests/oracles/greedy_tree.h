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

// Brute-force greedy regression tree, written without the histogram
// machinery: every (feature, observed value) split is scored by summing the
// gradients of the rows that fall on each side.

#ifndef SBOOST_TESTS_ORACLES_GREEDY_TREE_H_
#define SBOOST_TESTS_ORACLES_GREEDY_TREE_H_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <vector>

namespace oracle {

struct Node {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double weight = 0.0;
};

struct GreedyParams {
  double lambda = 1.0;
  double gamma = 0.0;
  double min_child_weight = 1.0;
  int max_depth = 6;
};

inline double Score(double g, double h, double lambda) {
  const double d = h + lambda;
  return d == 0.0 ? 0.0 : g * g / d;
}

// rows[i][f] is feature f of row i.
inline std::vector<Node> GreedyTree(const std::vector<std::vector<double>>& rows,
                                    const std::vector<double>& g,
                                    const std::vector<double>& h,
                                    const GreedyParams& p) {
  struct Pending {
    int id;
    int depth;
    std::vector<std::size_t> members;
  };
  std::vector<Node> nodes(1);
  std::deque<Pending> queue;
  std::vector<std::size_t> all(rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  queue.push_back({0, 0, all});
  const std::size_t d = rows.empty() ? 0 : rows[0].size();

  while (!queue.empty()) {
    Pending cur = std::move(queue.front());
    queue.pop_front();
    double G = 0.0, H = 0.0;
    for (std::size_t i : cur.members) {
      G += g[i];
      H += h[i];
    }
    bool found = false;
    int best_f = -1;
    double best_t = 0.0, best_gain = 0.0;
    if (cur.depth < p.max_depth) {
      for (std::size_t f = 0; f < d; ++f) {
        std::set<double> values;
        for (std::size_t i = 0; i < rows.size(); ++i) values.insert(rows[i][f]);
        for (double t : values) {
          double gl = 0.0, hl = 0.0, gr = 0.0, hr = 0.0;
          for (std::size_t i : cur.members) {
            if (rows[i][f] < t) {
              gl += g[i];
              hl += h[i];
            } else {
              gr += g[i];
              hr += h[i];
            }
          }
          if (hl < p.min_child_weight || hr < p.min_child_weight) continue;
          const double gain =
              0.5 * (Score(gl, hl, p.lambda) + Score(gr, hr, p.lambda) -
                     Score(gl + gr, hl + hr, p.lambda)) -
              p.gamma;
          if (gain > 0.0 && (!found || gain > best_gain)) {
            found = true;
            best_f = static_cast<int>(f);
            best_t = t;
            best_gain = gain;
          }
        }
      }
    }
    if (!found) {
      const double denom = H + p.lambda;
      nodes[cur.id].weight = denom == 0.0 ? 0.0 : -G / denom;
      continue;
    }
    const int l = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes.emplace_back();
    nodes[cur.id].feature = best_f;
    nodes[cur.id].threshold = best_t;
    nodes[cur.id].left = l;
    nodes[cur.id].right = l + 1;
    Pending left{l, cur.depth + 1, {}}, right{l + 1, cur.depth + 1, {}};
    for (std::size_t i : cur.members) {
      (rows[i][best_f] < best_t ? left : right).members.push_back(i);
    }
    queue.push_back(std::move(left));
    queue.push_back(std::move(right));
  }
  return nodes;
}

inline double Route(const std::vector<Node>& nodes,
                    const std::vector<double>& row) {
  int id = 0;
  while (nodes[id].feature >= 0) {
    id = row[nodes[id].feature] < nodes[id].threshold ? nodes[id].left
                                                      : nodes[id].right;
  }
  return nodes[id].weight;
}

}  // namespace oracle

#endif  // SBOOST_TESTS_ORACLES_GREEDY_TREE_H_
