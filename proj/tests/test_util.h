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

#ifndef SBOOST_TESTS_TEST_UTIL_H_
#define SBOOST_TESTS_TEST_UTIL_H_

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "sboost/data.h"

namespace sboost::testing {

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("sboost_test_" + std::to_string(rd()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void WriteFile(const std::filesystem::path& path,
                      const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Random dense dataset; values drawn from `levels` distinct integers when
// levels > 0, otherwise continuous.
inline Dataset RandomDataset(std::size_t n, std::size_t d, std::uint64_t seed,
                             int levels = 0, bool binary_labels = true) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> cols(d, std::vector<double>(n));
  std::vector<double> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    double score = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double u = unit(rng);
      cols[j][i] = levels > 0 ? std::floor(u * levels) : u;
      score += (j % 2 == 0 ? 1.0 : -0.5) * u;
    }
    const double noisy = score + 0.3 * (unit(rng) - 0.5);
    labels[i] = binary_labels ? (noisy > 0.25 * static_cast<double>(d) ? 1.0 : 0.0)
                              : 10.0 * noisy;
  }
  return Dataset::FromColumns(std::move(cols), std::move(labels));
}

}  // namespace sboost::testing

#endif  // SBOOST_TESTS_TEST_UTIL_H_
