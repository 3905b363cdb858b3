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

#include "streamaudit/diagnostics.hpp"
#include "streamaudit/error.hpp"

#include <algorithm>
#include <thread>

namespace streamaudit {

namespace {

void require_nonempty(std::span<const Label> labels) {
  if (labels.empty())
    fail(ErrorCode::EmptyStream, "label stream is empty");
}

std::size_t class_count(std::span<const Label> labels, std::size_t num_classes) {
  std::size_t needed = 0;
  for (Label l : labels)
    needed = std::max(needed, index_of(l) + 1);
  if (num_classes == 0)
    return needed;
  if (needed > num_classes)
    fail(ErrorCode::InvalidArgument, "label index out of range for class count");
  return num_classes;
}

} // namespace

Label ColdStart::resolve(std::span<const Label> labels) const {
  switch (policy) {
  case Policy::SchemaFirst:
    return label_at(0);
  case Policy::Fixed:
    return label;
  case Policy::GlobalMajority: {
    if (labels.empty())
      return label_at(0);
    const auto dist = label_distribution(labels);
    const auto it = std::max_element(dist.counts.begin(), dist.counts.end());
    return label_at(static_cast<std::size_t>(it - dist.counts.begin()));
  }
  }
  return label_at(0);
}

LabelDistribution label_distribution(std::span<const Label> labels,
                                     std::size_t num_classes) {
  require_nonempty(labels);
  LabelDistribution dist;
  dist.n = labels.size();
  dist.counts.assign(class_count(labels, num_classes), 0);
  for (Label l : labels)
    ++dist.counts[index_of(l)];
  dist.frequencies.reserve(dist.counts.size());
  for (auto c : dist.counts)
    dist.frequencies.push_back(static_cast<double>(c) / static_cast<double>(dist.n));
  return dist;
}

double independence_bar(const LabelDistribution& dist) {
  double sum = 0.0;
  for (double p : dist.frequencies)
    sum += p * p;
  return sum;
}

double persistence_accuracy(std::span<const Label> labels, const ColdStart& cold_start) {
  require_nonempty(labels);
  std::size_t correct = labels.front() == cold_start.resolve(labels) ? 1 : 0;
  for (std::size_t t = 1; t < labels.size(); ++t)
    correct += labels[t] == labels[t - 1] ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(labels.size());
}

AcfSeries autocorrelation(std::span<const Label> labels, std::size_t max_lag,
                          unsigned threads) {
  require_nonempty(labels);
  if (max_lag == 0)
    fail(ErrorCode::InvalidArgument, "max_lag must be positive");

  auto [lo_it, hi_it] = std::minmax_element(labels.begin(), labels.end());
  const Label lo = *lo_it;
  const Label hi = *hi_it;
  for (Label l : labels)
    if (l != lo && l != hi)
      fail(ErrorCode::NotBinary, "autocorrelation needs binary labels; more than two classes occur");
  if (lo == hi)
    fail(ErrorCode::ZeroVariance, "only one class occurs; autocorrelation is undefined");
  const std::size_t n = labels.size();
  if (max_lag >= n)
    fail(ErrorCode::LagTooLarge, "max_lag " + std::to_string(max_lag) +
                                     " must be below the stream length " + std::to_string(n));

  std::size_t ones = 0;
  for (Label l : labels)
    ones += l == hi ? 1 : 0;
  const double mean = static_cast<double>(ones) / static_cast<double>(n);
  std::vector<double> dev(n);
  for (std::size_t t = 0; t < n; ++t)
    dev[t] = (labels[t] == hi ? 1.0 : 0.0) - mean;
  double denom = 0.0;
  for (double d : dev)
    denom += d * d;

  AcfSeries acf;
  acf.lags.resize(max_lag);
  acf.values.resize(max_lag);
  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t k = first; k < last; ++k) {
      const std::size_t lag = k + 1;
      double num = 0.0;
      for (std::size_t t = 0; t + lag < n; ++t)
        num += dev[t] * dev[t + lag];
      acf.lags[k] = lag;
      acf.values[k] = num / denom;
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, max_lag);
  if (workers == 1) {
    work(0, max_lag);
    return acf;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (max_lag + workers - 1) / workers;
  for (std::size_t first = 0; first < max_lag; first += chunk)
    pool.emplace_back(work, first, std::min(max_lag, first + chunk));
  pool.clear();
  return acf;
}

RunLengthStats run_lengths(std::span<const Label> labels, std::size_t num_classes) {
  require_nonempty(labels);
  RunLengthStats stats;
  std::vector<std::size_t> totals(class_count(labels, num_classes), 0);
  stats.per_class.resize(totals.size());

  auto close_run = [&](Label cls, std::size_t length) {
    auto& c = stats.per_class[index_of(cls)];
    ++c.count;
    c.max = std::max(c.max, length);
    totals[index_of(cls)] += length;
    ++stats.overall.count;
    stats.overall.max = std::max(stats.overall.max, length);
  };

  std::size_t length = 1;
  for (std::size_t t = 1; t < labels.size(); ++t) {
    if (labels[t] == labels[t - 1]) {
      ++length;
    } else {
      close_run(labels[t - 1], length);
      length = 1;
    }
  }
  close_run(labels.back(), length);

  stats.overall.mean = static_cast<double>(labels.size()) /
                       static_cast<double>(stats.overall.count);
  for (std::size_t c = 0; c < totals.size(); ++c)
    if (stats.per_class[c].count > 0)
      stats.per_class[c].mean = static_cast<double>(totals[c]) /
                                static_cast<double>(stats.per_class[c].count);
  return stats;
}

DiagnosticsReport diagnose(const StreamDataset& ds, std::size_t max_lag,
                           const ColdStart& cold_start, unsigned threads) {
  const auto labels = ds.labels();
  DiagnosticsReport report;
  report.class_values = ds.class_values();
  report.distribution = label_distribution(labels, ds.num_classes());
  report.independence_bar = independence_bar(report.distribution);
  report.persistence_bar = persistence_accuracy(labels, cold_start);
  report.run_lengths = run_lengths(labels, ds.num_classes());
  try {
    report.acf = autocorrelation(labels, max_lag, threads);
  } catch (const Error& e) {
    switch (e.code()) {
    case ErrorCode::ZeroVariance:
    case ErrorCode::NotBinary:
    case ErrorCode::LagTooLarge:
      report.acf_error = std::string(to_string(e.code())) + ": " + e.what();
      break;
    default:
      throw;
    }
  }
  return report;
}

} // namespace streamaudit
