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

// Expected best rank of a uniform k-subset, summed over the position of the
// best element: the best sits at 1-based rank i with probability
// C(n - i, k - 1) / C(n, k).

#ifndef SBOOST_TESTS_ORACLES_RANK_ERROR_SUM_H_
#define SBOOST_TESTS_ORACLES_RANK_ERROR_SUM_H_

#include <cstdint>

#include <boost/rational.hpp>

namespace oracle {

inline std::int64_t Choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline boost::rational<std::int64_t> ExpectedBestRank(std::int64_t n,
                                                      std::int64_t k) {
  boost::rational<std::int64_t> sum(0);
  const std::int64_t total = Choose(n, k);
  for (std::int64_t i = 1; i <= n; ++i) {
    sum += boost::rational<std::int64_t>((i - 1) * Choose(n - i, k - 1), total);
  }
  return sum;
}

}  // namespace oracle

#endif  // SBOOST_TESTS_ORACLES_RANK_ERROR_SUM_H_
