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

#include "sboost/data.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string_view>

#include "sboost/error.h"

namespace sboost {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      cells.push_back(Trim(line.substr(start)));
      break;
    }
    cells.push_back(Trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return cells;
}

// Parses a finite double occupying all of `cell`.
bool ParseFinite(std::string_view cell, double& out) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), out);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) return false;
  return std::isfinite(out);
}

std::string CellError(const std::filesystem::path& path, std::size_t line,
                      std::size_t column, std::string_view cell,
                      const std::string& header_name) {
  std::ostringstream msg;
  msg << path.string() << ": line " << line << ", column " << column;
  if (!header_name.empty()) msg << " ('" << header_name << "')";
  msg << ": cannot parse '" << cell << "' as a finite number";
  return msg.str();
}

std::vector<std::string> DefaultNames(std::size_t d) {
  std::vector<std::string> names(d);
  for (std::size_t j = 0; j < d; ++j) names[j] = "f" + std::to_string(j);
  return names;
}

}  // namespace

Dataset::Dataset(std::size_t num_rows, std::vector<double> column_major,
                 std::vector<double> labels,
                 std::vector<std::string> feature_names)
    : num_rows_(num_rows),
      values_(std::move(column_major)),
      labels_(std::move(labels)),
      feature_names_(std::move(feature_names)) {
  if (feature_names_.empty()) {
    throw DataError("dataset needs at least one feature column");
  }
  if (num_rows_ == 0) throw DataError("dataset needs at least one row");
  if (values_.size() != num_rows_ * feature_names_.size()) {
    throw DataError("feature matrix size does not match rows x columns");
  }
  if (labels_.size() != num_rows_) {
    throw DataError("label count " + std::to_string(labels_.size()) +
                    " does not match row count " + std::to_string(num_rows_));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("non-finite feature value at row " +
                      std::to_string(i % num_rows_) + ", feature " +
                      std::to_string(i / num_rows_));
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!std::isfinite(labels_[i])) {
      throw DataError("non-finite label at row " + std::to_string(i));
    }
  }
}

Dataset Dataset::FromColumns(std::vector<std::vector<double>> columns,
                             std::vector<double> labels,
                             std::vector<std::string> feature_names) {
  const std::size_t n = labels.size();
  if (feature_names.empty()) feature_names = DefaultNames(columns.size());
  if (feature_names.size() != columns.size()) {
    throw DataError("feature name count does not match column count");
  }
  std::vector<double> values;
  values.reserve(n * columns.size());
  for (const auto& column : columns) {
    if (column.size() != n) {
      throw DataError("column length does not match label count");
    }
    values.insert(values.end(), column.begin(), column.end());
  }
  return Dataset(n, std::move(values), std::move(labels),
                 std::move(feature_names));
}

Dataset Dataset::Subset(std::span<const std::size_t> rows) const {
  std::vector<double> values;
  values.reserve(rows.size() * num_features());
  for (std::size_t j = 0; j < num_features(); ++j) {
    const auto col = column(j);
    for (std::size_t r : rows) values.push_back(col[r]);
  }
  std::vector<double> labels;
  labels.reserve(rows.size());
  for (std::size_t r : rows) labels.push_back(labels_[r]);
  return Dataset(rows.size(), std::move(values), std::move(labels),
                 feature_names_);
}

std::vector<double> Dataset::Row(std::size_t row) const {
  std::vector<double> out(num_features());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = at(row, j);
  return out;
}

CsvTable ReadCsvTable(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());

  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool have_width = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = Trim(line);
    if (content.empty()) continue;
    auto cells = SplitCommas(content);
    if (!have_width) {
      width = cells.size();
      have_width = true;
      table.columns.resize(width);
      if (has_header) {
        for (auto cell : cells) table.header.emplace_back(cell);
        continue;
      }
    }
    if (cells.size() != width) {
      throw DataError(path.string() + ": line " + std::to_string(line_no) +
                      " has " + std::to_string(cells.size()) +
                      " columns, expected " + std::to_string(width));
    }
    for (std::size_t j = 0; j < width; ++j) {
      double v = 0.0;
      if (!ParseFinite(cells[j], v)) {
        throw DataError(CellError(path, line_no, j, cells[j],
                                  has_header ? table.header[j] : ""));
      }
      table.columns[j].push_back(v);
    }
    ++table.num_rows;
  }
  return table;
}

Dataset LoadCsv(const std::filesystem::path& path, const CsvOptions& options) {
  CsvTable table = ReadCsvTable(path, options.has_header);
  const std::size_t width = table.columns.size();

  std::size_t label = 0;
  if (const auto* name = std::get_if<std::string>(&options.label_column)) {
    const auto it = std::find(table.header.begin(), table.header.end(), *name);
    if (it == table.header.end()) {
      throw DataError(path.string() + ": label column '" + *name +
                      "' not found");
    }
    label = static_cast<std::size_t>(it - table.header.begin());
  } else {
    label = std::get<std::size_t>(options.label_column);
    if (label >= width) {
      throw DataError(path.string() + ": label column index " +
                      std::to_string(label) + " out of range (" +
                      std::to_string(width) + " columns)");
    }
  }
  if (width < 2) {
    throw DataError(path.string() + ": need a label and at least one feature");
  }
  if (table.num_rows == 0) {
    throw DataError(path.string() + ": no data rows");
  }

  std::vector<std::string> names;
  std::vector<double> values;
  values.reserve(table.num_rows * (width - 1));
  for (std::size_t j = 0; j < width; ++j) {
    if (j == label) continue;
    names.push_back(options.has_header ? table.header[j]
                                       : "f" + std::to_string(names.size()));
    values.insert(values.end(), table.columns[j].begin(),
                  table.columns[j].end());
  }
  return Dataset(table.num_rows, std::move(values),
                 std::move(table.columns[label]), std::move(names));
}

void WriteCsv(const Dataset& ds, const std::filesystem::path& path,
              const std::string& label_name) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& name : ds.feature_names()) out << name << ',';
  out << label_name << '\n';

  char buf[64];
  auto put = [&](double v) {
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, res.ptr - buf);
  };
  for (std::size_t i = 0; i < ds.num_rows(); ++i) {
    for (std::size_t j = 0; j < ds.num_features(); ++j) {
      put(ds.at(i, j));
      out << ',';
    }
    put(ds.labels()[i]);
    out << '\n';
  }
  if (!out) throw DataError("write failed for " + path.string());
}

Dataset LoadLibsvm(const std::filesystem::path& path,
                   std::size_t num_features) {
  if (num_features == 0) throw ConfigError("n_features must be positive");
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());

  std::vector<std::vector<double>> columns(num_features);
  std::vector<double> labels;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw DataError(path.string() + ": line " + std::to_string(line_no) +
                    ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;  // blank line

    double label = 0.0;
    if (!ParseFinite(token, label)) fail("bad label '" + token + "'");
    labels.push_back(label);
    for (auto& column : columns) column.push_back(0.0);

    while (tokens >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos) fail("expected idx:value, got '" + token + "'");
      std::size_t index = 0;
      const std::string_view idx(token.data(), colon);
      const auto [ptr, ec] =
          std::from_chars(idx.data(), idx.data() + idx.size(), index);
      if (ec != std::errc() || ptr != idx.data() + idx.size()) {
        fail("bad feature index '" + std::string(idx) + "'");
      }
      if (index < 1 || index > num_features) {
        fail("feature index " + std::to_string(index) + " outside [1, " +
             std::to_string(num_features) + "]");
      }
      double value = 0.0;
      if (!ParseFinite(std::string_view(token).substr(colon + 1), value)) {
        fail("bad feature value in '" + token + "'");
      }
      columns[index - 1].back() = value;
    }
  }
  if (labels.empty()) throw DataError(path.string() + ": no data rows");
  return Dataset::FromColumns(std::move(columns), std::move(labels));
}

std::vector<DataPartition> Partition(const Dataset& ds, int workers,
                                     std::uint64_t seed) {
  const std::size_t n = ds.num_rows();
  if (workers < 1) throw ConfigError("worker count must be at least 1");
  if (static_cast<std::size_t>(workers) > n) {
    throw ConfigError("worker count " + std::to_string(workers) +
                      " exceeds row count " + std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  const std::size_t w = static_cast<std::size_t>(workers);
  const std::size_t base = n / w;
  const std::size_t extra = n % w;
  std::vector<DataPartition> parts(w);
  std::size_t begin = 0;
  for (std::size_t p = 0; p < w; ++p) {
    const std::size_t size = base + (p < extra ? 1 : 0);
    parts[p].worker_id = static_cast<int>(p);
    parts[p].row_indices.assign(order.begin() + begin,
                                order.begin() + begin + size);
    std::sort(parts[p].row_indices.begin(), parts[p].row_indices.end());
    begin += size;
  }
  return parts;
}

}  // namespace sboost
