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

#ifndef SBOOST_QUANTILE_H_
#define SBOOST_QUANTILE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sboost {

// One summary tuple. rmin/rmax bound the total weight of items <= value;
// w is a lower bound on the weight of items equal to value (exact for
// batch-built summaries).
struct GkEntry {
  double value = 0.0;
  double w = 0.0;
  double rmin = 0.0;
  double rmax = 0.0;

  friend bool operator==(const GkEntry&, const GkEntry&) = default;
};

// Weighted Greenwald-Khanna style quantile summary.
//
// Guarantee: for any v, |QueryRank(v) - W(<= v)| <= eps * total_weight,
// which follows from two per-summary bounds checked by Validate():
//   rmax_i - rmin_i                    <= 2 eps W   (entry width)
//   rmax_{i+1} - w_{i+1} - rmin_i      <= 2 eps W   (gap between entries)
// The first and last entries are the exact minimum and maximum, with
// rmin = rmax = w for the first and rmin = rmax = W for the last.
struct GkSummary {
  std::vector<GkEntry> entries;
  double eps = 0.0;
  double total_weight = 0.0;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }

  // Returns an empty string when every invariant holds, else a description
  // of the first violation. `slack` absorbs floating-point rounding.
  std::string Validate(double slack = 1e-9) const;

  // Largest of the width and gap bounds divided by 2W: the error bound the
  // entries actually certify (never above eps for a valid summary).
  double CertifiedEps() const;

  friend bool operator==(const GkSummary&, const GkSummary&) = default;
};

// Sorts (value, weight) pairs and keeps entries spaced at most eps * W apart
// in cumulative weight. `weights` may be empty for unit weights.
// Throws ConfigError on empty input, negative weights, zero total weight or
// eps outside (0, 1).
GkSummary GkBuild(std::span<const double> values,
                  std::span<const double> weights, double eps);

// Combines two summaries of disjoint multisets. The result's eps is
// max(a.eps, b.eps); total weights add.
GkSummary GkMerge(const GkSummary& a, const GkSummary& b);

// Keeps at most b + 1 entries, always including the first and the last.
// The result's eps is s.eps + 1 / (2b). Summaries already within b + 1
// entries are returned unchanged. Requires b >= 2 (throws ConfigError).
GkSummary GkPrune(const GkSummary& s, std::size_t b);

// Estimated total weight of items <= v.
double GkQueryRank(const GkSummary& s, double v);

// Candidate thresholds from a summary: all entry values when the summary
// holds at most k entries, otherwise the values of GkPrune(s, k) without
// the minimum (a threshold at the minimum would leave the left child empty).
std::vector<double> CandidatesFromSummary(const GkSummary& s, std::size_t k);

// Sketch accuracy used for k candidates: 1/k (0.5 when k == 1, since eps
// must stay below 1).
double QuantileEps(std::size_t k);

// Builds a summary with eps = 1/k and extracts at most k thresholds, all of
// them observed values. `hessians` empty means unit weights.
std::vector<double> ProposeQuantileCandidates(std::span<const double> column,
                                              std::span<const double> hessians,
                                              std::size_t k);

}  // namespace sboost

#endif  // SBOOST_QUANTILE_H_
