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

#ifndef SBOOST_DATA_H_
#define SBOOST_DATA_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace sboost {

// Dense, column-major training data. Column j occupies
// values()[j * num_rows(), (j + 1) * num_rows()).
class Dataset {
 public:
  Dataset() = default;

  // Validates shape and finiteness; throws DataError on violation.
  // `column_major` must hold num_rows * feature_names.size() values.
  Dataset(std::size_t num_rows, std::vector<double> column_major,
          std::vector<double> labels, std::vector<std::string> feature_names);

  // Builds from per-column vectors.
  static Dataset FromColumns(std::vector<std::vector<double>> columns,
                             std::vector<double> labels,
                             std::vector<std::string> feature_names = {});

  std::size_t num_rows() const { return num_rows_; }
  std::size_t num_features() const { return feature_names_.size(); }

  std::span<const double> column(std::size_t feature) const {
    return {values_.data() + feature * num_rows_, num_rows_};
  }
  double at(std::size_t row, std::size_t feature) const {
    return values_[feature * num_rows_ + row];
  }
  std::span<const double> labels() const { return labels_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  const std::vector<double>& values() const { return values_; }

  // Copies `rows` (in the given order) into a new dataset.
  Dataset Subset(std::span<const std::size_t> rows) const;

  // Row-major copy of one row.
  std::vector<double> Row(std::size_t row) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::size_t num_rows_ = 0;
  std::vector<double> values_;
  std::vector<double> labels_;
  std::vector<std::string> feature_names_;
};

// One simulated worker's share of a dataset.
struct DataPartition {
  int worker_id = 0;
  std::vector<std::size_t> row_indices;  // strictly increasing

  friend bool operator==(const DataPartition&, const DataPartition&) = default;
};

// Label column selector: header name or zero-based column index.
using ColumnRef = std::variant<std::string, std::size_t>;

struct CsvOptions {
  ColumnRef label_column = std::string("label");
  bool has_header = true;
};

// Parsed CSV before label extraction; used when the label may be absent.
struct CsvTable {
  std::vector<std::string> header;          // empty when the file has none
  std::vector<std::vector<double>> columns;  // column-major
  std::size_t num_rows = 0;
};

CsvTable ReadCsvTable(const std::filesystem::path& path, bool has_header);

Dataset LoadCsv(const std::filesystem::path& path, const CsvOptions& options);

// Writes `ds` with a header row; the label is the last column named
// `label_name`. Values are written in shortest round-trip form.
void WriteCsv(const Dataset& ds, const std::filesystem::path& path,
              const std::string& label_name = "label");

// LIBSVM text format, 1-based feature indices, densified with zeros.
Dataset LoadLibsvm(const std::filesystem::path& path, std::size_t num_features);

// Shuffles row ids with `seed`, cuts them into `workers` near-equal
// contiguous chunks (the first n % workers chunks get one extra row) and
// sorts each chunk.
std::vector<DataPartition> Partition(const Dataset& ds, int workers,
                                     std::uint64_t seed);

}  // namespace sboost

#endif  // SBOOST_DATA_H_
