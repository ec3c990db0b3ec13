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

// Exact weighted rank from a sorted copy of the stream.

#ifndef SBOOST_TESTS_ORACLES_RANK_ORACLE_H_
#define SBOOST_TESTS_ORACLES_RANK_ORACLE_H_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

class SortedRank {
 public:
  SortedRank(const std::vector<double>& values,
             const std::vector<double>& weights) {
    std::vector<std::pair<double, double>> items(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      items[i] = {values[i], weights.empty() ? 1.0 : weights[i]};
    }
    std::sort(items.begin(), items.end());
    values_.reserve(items.size());
    prefix_.reserve(items.size());
    double run = 0.0;
    for (const auto& [v, w] : items) {
      run += w;
      values_.push_back(v);
      prefix_.push_back(run);
    }
  }

  // Total weight of items <= v.
  double RankOf(double v) const {
    const auto it = std::upper_bound(values_.begin(), values_.end(), v);
    if (it == values_.begin()) return 0.0;
    return prefix_[static_cast<std::size_t>(it - values_.begin()) - 1];
  }

  double total() const { return prefix_.empty() ? 0.0 : prefix_.back(); }

  // Smallest value whose rank reaches `r`.
  double Quantile(double r) const {
    const auto it = std::lower_bound(prefix_.begin(), prefix_.end(), r);
    return values_[std::min<std::size_t>(
        static_cast<std::size_t>(it - prefix_.begin()), values_.size() - 1)];
  }

 private:
  std::vector<double> values_;
  std::vector<double> prefix_;
};

}  // namespace oracle

#endif  // SBOOST_TESTS_ORACLES_RANK_ORACLE_H_
