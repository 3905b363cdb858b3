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

#include "streamaudit/eval.hpp"
#include "streamaudit/baselines.hpp"
#include "streamaudit/error.hpp"

#include <algorithm>
#include <chrono>

namespace streamaudit {

EvalReport prequential_eval(Classifier& classifier, const StreamDataset& ds,
                            bool keep_trace) {
  if (ds.empty())
    fail(ErrorCode::EmptyStream, "dataset has no instances");
  if (!(classifier.schema() == ds.schema))
    fail(ErrorCode::SchemaMismatch,
         "classifier '" + classifier.name() + "' is bound to a different schema");

  const std::size_t k = ds.num_classes();
  EvalReport report;
  report.classifier = classifier.name();
  report.n = ds.size();
  report.class_values = ds.class_values();
  report.confusion.assign(k, std::vector<std::size_t>(k, 0));
  if (keep_trace)
    report.predictions.reserve(ds.size());

  const auto start = std::chrono::steady_clock::now();
  for (const auto& inst : ds.instances) {
    const Label predicted = classifier.predict(inst.features);
    ++report.confusion[index_of(inst.label)].at(index_of(predicted));
    report.correct += predicted == inst.label ? 1 : 0;
    if (keep_trace)
      report.predictions.push_back(predicted);
    classifier.update(inst.features, inst.label);
  }
  const auto stop = std::chrono::steady_clock::now();

  report.accuracy = static_cast<double>(report.correct) / static_cast<double>(report.n);
  report.wall_time_seconds = std::chrono::duration<double>(stop - start).count();
  return report;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
  case Verdict::AbovePersistence: return "AbovePersistence";
  case Verdict::BelowPersistence: return "BelowPersistence";
  case Verdict::BelowMajority: return "BelowMajority";
  }
  return "Unknown";
}

AuditVerdict audit_accuracy(double subject, std::span<const Label> labels,
                            const ColdStart& cold_start) {
  if (!(subject >= 0.0 && subject <= 1.0))
    fail(ErrorCode::InvalidArgument, "subject accuracy must lie in [0, 1]");
  if (labels.empty())
    fail(ErrorCode::EmptyStream, "label stream is empty");

  AuditVerdict v;
  v.subject = subject;
  v.persistence_bar = persistence_accuracy(labels, cold_start);
  v.independence_bar = independence_bar(label_distribution(labels));
  v.majority_bar = majority_baseline(labels, cold_start);
  v.margin = subject - v.persistence_bar;
  if (subject > v.persistence_bar)
    v.verdict = Verdict::AbovePersistence;
  else if (subject < v.majority_bar)
    v.verdict = Verdict::BelowMajority;
  else
    v.verdict = Verdict::BelowPersistence;
  return v;
}

AuditVerdict audit_accuracy(double subject, const StreamDataset& ds,
                            const ColdStart& cold_start) {
  return audit_accuracy(subject, ds.labels(), cold_start);
}

namespace {

LogAudit score_log(const PredictionLog& log, std::vector<std::string> classes) {
  auto index = [&classes](const std::string& value) {
    auto it = std::find(classes.begin(), classes.end(), value);
    if (it != classes.end())
      return static_cast<std::size_t>(it - classes.begin());
    classes.push_back(value);
    return classes.size() - 1;
  };

  std::vector<Label> truth, predicted;
  truth.reserve(log.truth.size());
  predicted.reserve(log.predicted.size());
  for (std::size_t i = 0; i < log.truth.size(); ++i) {
    truth.push_back(label_at(index(log.truth[i])));
    predicted.push_back(label_at(index(log.predicted[i])));
  }

  LogAudit out;
  auto& r = out.report;
  r.classifier = "prediction-log";
  r.n = truth.size();
  r.class_values = classes;
  r.confusion.assign(classes.size(), std::vector<std::size_t>(classes.size(), 0));
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ++r.confusion[index_of(truth[i])][index_of(predicted[i])];
    r.correct += truth[i] == predicted[i] ? 1 : 0;
  }
  r.accuracy = static_cast<double>(r.correct) / static_cast<double>(r.n);
  r.predictions = std::move(predicted);
  out.verdict = audit_accuracy(r.accuracy, truth);
  return out;
}

void require_rows(const PredictionLog& log) {
  if (log.truth.empty())
    fail(ErrorCode::EmptyLog, "prediction log has no rows");
  if (log.truth.size() != log.predicted.size())
    fail(ErrorCode::InvalidArgument, "prediction log columns differ in length");
}

} // namespace

LogAudit audit_prediction_log(const PredictionLog& log) {
  require_rows(log);
  return score_log(log, {});
}

LogAudit audit_prediction_log(const PredictionLog& log, const StreamDataset& ds) {
  require_rows(log);
  const auto& classes = ds.class_values();
  const std::size_t common = std::min(log.truth.size(), ds.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto& expected = classes[index_of(ds.instances[i].label)];
    if (log.truth[i] != expected)
      throw LabelMismatch(i, "true label at index " + std::to_string(i) + " is '" +
                                 log.truth[i] + "' but the dataset has '" + expected + "'");
  }
  if (log.truth.size() != ds.size())
    throw LabelMismatch(common, "prediction log has " + std::to_string(log.truth.size()) +
                                    " rows but the dataset has " +
                                    std::to_string(ds.size()) + " instances");
  return score_log(log, classes);
}

} // namespace streamaudit
