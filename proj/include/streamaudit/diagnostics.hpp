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

#ifndef STREAMAUDIT_DIAGNOSTICS_HPP
#define STREAMAUDIT_DIAGNOSTICS_HPP

#include "streamaudit/dataset.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace streamaudit {

/// What a label-only predictor outputs before it has seen any label.
///
/// SchemaFirst predicts class index 0 and is the default everywhere. Fixed
/// predicts a caller-chosen class. GlobalMajority predicts the most frequent
/// class of the whole stream (lowest index on ties); it looks ahead and is
/// only offered for comparison against tools that do.
struct ColdStart {
  enum class Policy { SchemaFirst, Fixed, GlobalMajority };

  Policy policy = Policy::SchemaFirst;
  Label label{};

  static ColdStart schema_first() { return {}; }
  static ColdStart fixed(Label label) { return {Policy::Fixed, label}; }
  static ColdStart global_majority() { return {Policy::GlobalMajority, Label{}}; }

  /// The concrete first prediction for `labels`.
  Label resolve(std::span<const Label> labels) const;
};

struct LabelDistribution {
  std::size_t n = 0;
  std::vector<std::size_t> counts;
  std::vector<double> frequencies;
};

/// Exact class counts over `num_classes` classes. With `num_classes` == 0 the
/// class count is taken as one past the largest label present.
/// Throws EmptyStream for an empty sequence.
LabelDistribution label_distribution(std::span<const Label> labels,
                                     std::size_t num_classes = 0);

/// Sum of squared class frequencies: the expected accuracy of the
/// persistence predictor if labels were drawn independently with these
/// priors.
double independence_bar(const LabelDistribution& dist);

/// Fraction of instances whose label equals the previous label, counting the
/// first instance against the cold-start prediction.
double persistence_accuracy(std::span<const Label> labels,
                            const ColdStart& cold_start = {});

struct AcfSeries {
  std::vector<std::size_t> lags; // 1..max_lag
  std::vector<double> values;
};

/// Biased sample autocorrelation of a binary label sequence for lags
/// 1..max_lag. Labels are encoded 0/1 in class-index order and every lag is
/// normalized by the full-series sum of squared deviations.
///
/// Errors: EmptyStream, InvalidArgument (max_lag == 0), NotBinary (more than
/// two classes occur), ZeroVariance (a single class occurs), LagTooLarge
/// (max_lag >= n). `threads` > 1 splits the lags across workers; the result
/// is identical to the sequential one.
AcfSeries autocorrelation(std::span<const Label> labels, std::size_t max_lag,
                          unsigned threads = 1);

struct RunSummary {
  std::size_t count = 0;
  double mean = 0.0;
  std::size_t max = 0;
};

struct RunLengthStats {
  RunSummary overall;
  std::vector<RunSummary> per_class; // indexed by class; count 0 if absent
};

/// Maximal constant-label runs. Throws EmptyStream.
RunLengthStats run_lengths(std::span<const Label> labels,
                           std::size_t num_classes = 0);

struct DiagnosticsReport {
  std::vector<std::string> class_values;
  LabelDistribution distribution;
  double independence_bar = 0.0;
  double persistence_bar = 0.0;
  RunLengthStats run_lengths;
  std::optional<AcfSeries> acf;
  std::string acf_error; // why acf is absent, empty otherwise
};

/// All label statistics of `ds` in one report. The ACF is omitted (with the
/// reason in acf_error) when it is undefined for this stream.
DiagnosticsReport diagnose(const StreamDataset& ds, std::size_t max_lag,
                           const ColdStart& cold_start = {},
                           unsigned threads = 1);

} // namespace streamaudit

#endif // STREAMAUDIT_DIAGNOSTICS_HPP
