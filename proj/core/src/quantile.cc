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

#include "sboost/quantile.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "sboost/error.h"

namespace sboost {
namespace {

// Weight bound on items strictly below entry i: rmax_i - w_i.
double LessUpper(const GkEntry& e) { return e.rmax - e.w; }

}  // namespace

std::string GkSummary::Validate(double slack) const {
  std::ostringstream msg;
  if (entries.empty()) return "summary has no entries";
  if (!(eps > 0.0)) return "eps must be positive";
  const double tol = slack * std::max(1.0, total_weight);
  const double bound = 2.0 * eps * total_weight + tol;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const GkEntry& e = entries[i];
    if (i > 0 && !(entries[i - 1].value < e.value)) {
      msg << "entry " << i << " not strictly above its predecessor";
      return msg.str();
    }
    if (e.w < 0.0 || e.rmin < -tol || e.rmin > e.rmax + tol ||
        e.rmax > total_weight + tol) {
      msg << "entry " << i << " has inconsistent bounds (w=" << e.w
          << ", rmin=" << e.rmin << ", rmax=" << e.rmax
          << ", W=" << total_weight << ")";
      return msg.str();
    }
    if (e.rmax - e.rmin > bound) {
      msg << "entry " << i << " width " << e.rmax - e.rmin << " exceeds "
          << bound;
      return msg.str();
    }
    if (i + 1 < entries.size()) {
      const double gap = LessUpper(entries[i + 1]) - e.rmin;
      if (gap > bound) {
        msg << "gap after entry " << i << " is " << gap << ", exceeds "
            << bound;
        return msg.str();
      }
    }
  }
  const GkEntry& first = entries.front();
  if (std::abs(first.rmin - first.w) > tol ||
      std::abs(first.rmax - first.w) > tol) {
    return "first entry is not exact";
  }
  const GkEntry& last = entries.back();
  if (std::abs(last.rmin - total_weight) > tol ||
      std::abs(last.rmax - total_weight) > tol) {
    return "last entry does not carry the total weight";
  }
  return {};
}

double GkSummary::CertifiedEps() const {
  if (entries.empty() || total_weight <= 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    worst = std::max(worst, entries[i].rmax - entries[i].rmin);
    if (i + 1 < entries.size()) {
      worst = std::max(worst, LessUpper(entries[i + 1]) - entries[i].rmin);
    }
  }
  return worst / (2.0 * total_weight);
}

GkSummary GkBuild(std::span<const double> values,
                  std::span<const double> weights, double eps) {
  if (values.empty()) throw ConfigError("cannot summarize an empty column");
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must lie in (0, 1)");
  const bool weighted = !weights.empty();
  if (weighted && weights.size() != values.size()) {
    throw ConfigError("weight count does not match value count");
  }

  std::vector<std::pair<double, double>> items(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double w = weighted ? weights[i] : 1.0;
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ConfigError("weights must be finite and non-negative");
    }
    items[i] = {values[i], w};
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Collapse duplicates into exact entries.
  std::vector<GkEntry> exact;
  double cum = 0.0;
  for (std::size_t i = 0; i < items.size();) {
    double w = 0.0;
    std::size_t j = i;
    for (; j < items.size() && items[j].first == items[i].first; ++j) {
      w += items[j].second;
    }
    cum += w;
    exact.push_back({items[i].first, w, cum, cum});
    i = j;
  }
  const double total = cum;
  if (!(total > 0.0)) throw ConfigError("total weight must be positive");

  GkSummary out;
  out.eps = eps;
  out.total_weight = total;
  const auto max_entries =
      static_cast<std::size_t>(std::ceil(1.0 / eps)) + 1;
  if (exact.size() <= max_entries) {
    out.entries = std::move(exact);
    return out;
  }

  // Keep the first entry reaching each target rank m * eps * W, which leaves
  // less than eps * W of weight between consecutive kept entries.
  out.entries.push_back(exact.front());
  std::size_t last_kept = 0;
  std::size_t i = 0;
  for (std::size_t m = 1;; ++m) {
    const double target = static_cast<double>(m) * eps * total;
    if (target >= total) break;
    while (i < exact.size() && exact[i].rmin < target) ++i;
    if (i >= exact.size()) break;
    if (i > last_kept) {
      out.entries.push_back(exact[i]);
      last_kept = i;
    }
  }
  if (last_kept != exact.size() - 1) out.entries.push_back(exact.back());
  return out;
}

GkSummary GkMerge(const GkSummary& a, const GkSummary& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;

  GkSummary out;
  out.eps = std::max(a.eps, b.eps);
  out.total_weight = a.total_weight + b.total_weight;
  out.entries.reserve(a.size() + b.size());

  // Bounds contributed by `other` for a value lying strictly between
  // other[next - 1] and other[next].
  auto lower_from = [](const GkSummary& other, std::size_t next) {
    return next == 0 ? 0.0 : other.entries[next - 1].rmin;
  };
  auto upper_from = [](const GkSummary& other, std::size_t next) {
    return next == other.size() ? other.total_weight
                                : LessUpper(other.entries[next]);
  };

  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() ||
        (i < a.size() && a.entries[i].value < b.entries[j].value)) {
      const GkEntry& e = a.entries[i++];
      out.entries.push_back({e.value, e.w, e.rmin + lower_from(b, j),
                             e.rmax + upper_from(b, j)});
    } else if (i == a.size() || b.entries[j].value < a.entries[i].value) {
      const GkEntry& e = b.entries[j++];
      out.entries.push_back({e.value, e.w, lower_from(a, i) + e.rmin,
                             upper_from(a, i) + e.rmax});
    } else {
      const GkEntry& x = a.entries[i++];
      const GkEntry& y = b.entries[j++];
      out.entries.push_back(
          {x.value, x.w + y.w, x.rmin + y.rmin, x.rmax + y.rmax});
    }
  }
  return out;
}

GkSummary GkPrune(const GkSummary& s, std::size_t b) {
  if (b < 2) throw ConfigError("prune size must be at least 2");
  if (s.size() <= b + 1) return s;

  const double total = s.total_weight;
  const double reach = s.eps * total;
  const double tol = 1e-12 * total;
  const auto& e = s.entries;

  // For target rank r pick, among entries at or after the previous pick, one
  // with rmin >= r - eps W and rmax - w <= r + eps W, preferring the midpoint
  // nearest r. Such an entry always exists in a valid summary, and any two
  // consecutive picks then differ by at most W/b + 2 eps W.
  std::vector<std::size_t> picks;
  picks.reserve(b + 1);
  std::size_t prev = 0;
  for (std::size_t j = 0; j < b; ++j) {
    const double r = static_cast<double>(j) * total / static_cast<double>(b);
    std::size_t best = e.size();
    double best_dist = std::numeric_limits<double>::infinity();
    std::size_t fallback = e.size();
    for (std::size_t i = prev; i < e.size(); ++i) {
      if (e[i].rmin - r > best_dist) break;  // rmin is non-decreasing
      if (e[i].rmin < r - reach - tol) continue;
      if (fallback == e.size()) fallback = i;
      if (LessUpper(e[i]) > r + reach + tol) continue;
      const double dist = std::abs(0.5 * (e[i].rmin + e[i].rmax) - r);
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    if (best == e.size()) best = fallback == e.size() ? e.size() - 1 : fallback;
    if (picks.empty() || picks.back() != best) picks.push_back(best);
    prev = best;
  }
  if (picks.back() != e.size() - 1) picks.push_back(e.size() - 1);

  GkSummary out;
  out.eps = s.eps + 0.5 / static_cast<double>(b);
  out.total_weight = total;
  out.entries.reserve(picks.size());
  for (std::size_t p : picks) out.entries.push_back(e[p]);
  return out;
}

double GkQueryRank(const GkSummary& s, double v) {
  const auto& e = s.entries;
  const auto it = std::upper_bound(
      e.begin(), e.end(), v,
      [](double value, const GkEntry& entry) { return value < entry.value; });
  if (it == e.begin()) return 0.0;
  const GkEntry& below = *(it - 1);
  if (below.value == v) return 0.5 * (below.rmin + below.rmax);
  if (it == e.end()) return s.total_weight;
  return 0.5 * (below.rmin + LessUpper(*it));
}

std::vector<double> CandidatesFromSummary(const GkSummary& s, std::size_t k) {
  if (k == 0) throw ConfigError("candidate count k must be at least 1");
  std::vector<double> out;
  if (s.size() <= k) {
    out.reserve(s.size());
    for (const auto& entry : s.entries) out.push_back(entry.value);
    return out;
  }
  const GkSummary pruned = GkPrune(s, std::max<std::size_t>(k, 2));
  for (std::size_t i = 1; i < pruned.size() && out.size() < k; ++i) {
    out.push_back(pruned.entries[i].value);
  }
  return out;
}

double QuantileEps(std::size_t k) {
  return k <= 1 ? 0.5 : 1.0 / static_cast<double>(k);
}

std::vector<double> ProposeQuantileCandidates(std::span<const double> column,
                                              std::span<const double> hessians,
                                              std::size_t k) {
  if (k == 0) throw ConfigError("candidate count k must be at least 1");
  return CandidatesFromSummary(GkBuild(column, hessians, QuantileEps(k)), k);
}

}  // namespace sboost
