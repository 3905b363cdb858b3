// Copyright 2026 The streamaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STREAMAUDIT_STREAM_IO_HPP
#define STREAMAUDIT_STREAM_IO_HPP

#include "streamaudit/dataset.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace streamaudit {

/// Selects the class attribute by 0-based position or by name. The
/// monostate default means "last attribute".
using ColumnSelector = std::variant<std::monostate, std::size_t, std::string>;

struct ArffOptions {
  ColumnSelector class_attribute;
};

/// Reads the dense ARFF subset: @relation, numeric/real/integer and nominal
/// attributes, @data with comma-separated rows, '%' comments. Sparse rows,
/// string/date/relational attributes and '?' raise UnsupportedFeature; any
/// other malformation raises ParseError with the source line.
StreamDataset parse_arff(std::istream& source, const ArffOptions& options = {});

struct CsvOptions {
  bool has_header = true;
  ColumnSelector class_column;
};

/// Reads a rectangular CSV. The class column is always nominal; other columns
/// are numeric when every cell parses as a number, otherwise nominal with
/// values in order of first occurrence. Lines starting with '#' before the
/// first record are skipped. Quoted fields are accepted, doubled-quote
/// escapes are not.
StreamDataset parse_csv(std::istream& source, const CsvOptions& options = {});

/// Writes `ds` as ARFF such that parse_arff reproduces it exactly (class
/// attribute position included, via the class_attribute option when it is
/// not last).
void write_arff(std::ostream& out, const StreamDataset& ds);

enum class DatasetFormat { Auto, Arff, Csv };

/// Reads a dataset from `path`, or standard input when `path` is "-". Auto
/// picks CSV for a ".csv" extension and ARFF for other file names; for
/// standard input it sniffs the first meaningful line (ARFF starts with '@').
/// CSV input is read with a header and the class in the last column.
StreamDataset load_dataset(const std::string& path,
                           DatasetFormat format = DatasetFormat::Auto);

struct DatasetSummary {
  std::size_t n_instances = 0;
  std::size_t n_features = 0;
  std::vector<std::string> class_values;
  std::vector<std::size_t> class_counts;
};

DatasetSummary dataset_summary(const StreamDataset& ds);

/// Externally produced predictions, one row per instance in stream order.
struct PredictionLog {
  std::vector<std::string> truth;
  std::vector<std::string> predicted;
};

/// CSV with header "true,predicted"; labels are taken verbatim (trimmed).
/// A log with no rows is returned empty; the auditor rejects it.
PredictionLog parse_prediction_log(std::istream& source);

} // namespace streamaudit

#endif // STREAMAUDIT_STREAM_IO_HPP
