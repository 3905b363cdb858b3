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

#ifndef STREAMAUDIT_EVAL_HPP
#define STREAMAUDIT_EVAL_HPP

#include "streamaudit/dataset.hpp"
#include "streamaudit/diagnostics.hpp"
#include "streamaudit/random.hpp"
#include "streamaudit/stream_io.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace streamaudit {

/// Online classifier bound to one schema. predict() must not change state;
/// after reset() the classifier behaves exactly like a new one.
class Classifier {
public:
  explicit Classifier(Schema schema) : schema_(std::move(schema)) {}
  virtual ~Classifier() = default;

  virtual std::string name() const = 0;
  virtual Label predict(std::span<const double> features) const = 0;
  virtual void update(std::span<const double> features, Label label) = 0;
  virtual void reset() = 0;

  const Schema& schema() const noexcept { return schema_; }

private:
  Schema schema_;
};

/// Gaussian naive Bayes for numeric features, add-one smoothed frequency
/// tables for nominal features, add-one smoothed class priors. Classes never
/// seen in training score -inf; ties go to the lower class index.
class NaiveBayes final : public Classifier {
public:
  static constexpr double kVarianceFloor = 1e-9;

  explicit NaiveBayes(Schema schema);

  std::string name() const override { return "naive-bayes"; }
  Label predict(std::span<const double> features) const override;
  void update(std::span<const double> features, Label label) override;
  void reset() override;

  /// Unnormalized log posterior per class.
  std::vector<double> log_scores(std::span<const double> features) const;

  /// Index of the largest score, lowest index on ties.
  static Label argmax(std::span<const double> scores);

private:
  struct Gaussian {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;
  };

  std::size_t num_classes_;
  std::size_t num_features_;
  std::size_t seen_ = 0;
  std::vector<std::size_t> class_counts_;
  std::vector<Gaussian> gaussians_;             // [class][feature]
  std::vector<std::vector<std::size_t>> tables_; // [class][feature][value]
};

/// Prequential incremental majority (see majority_baseline).
class MajorityClassifier final : public Classifier {
public:
  MajorityClassifier(Schema schema, Label cold_start);

  std::string name() const override { return "majority"; }
  Label predict(std::span<const double> features) const override;
  void update(std::span<const double> features, Label label) override;
  void reset() override;

private:
  Label cold_start_;
  std::size_t t_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> last_seen_;
};

/// Predicts the previous label (the "moving average of one").
class PersistenceClassifier final : public Classifier {
public:
  PersistenceClassifier(Schema schema, Label cold_start);

  std::string name() const override { return "persistence"; }
  Label predict(std::span<const double> features) const override;
  void update(std::span<const double> features, Label label) override;
  void reset() override;

private:
  Label cold_start_;
  Label previous_;
  bool has_previous_ = false;
};

/// Windowed majority with random restarts (see random_restart_run).
class RestartClassifier final : public Classifier {
public:
  /// Throws InvalidRho for rho outside [0, 1].
  RestartClassifier(Schema schema, double rho, std::uint64_t seed, Label cold_start);

  std::string name() const override;
  Label predict(std::span<const double> features) const override;
  void update(std::span<const double> features, Label label) override;
  void reset() override;

private:
  double rho_;
  std::uint64_t seed_;
  Label cold_start_;
  Xoshiro256 rng_;
  std::size_t t_ = 0;
  std::size_t window_size_ = 0;
  Label previous_{};
  std::vector<std::size_t> window_;
  std::vector<std::size_t> last_seen_;
};

/// Builds a learner from "naive-bayes", "majority", "persistence" or
/// "restart:RHO". Throws InvalidArgument for an unknown spec.
std::unique_ptr<Classifier> make_classifier(std::string_view spec, const Schema& schema,
                                            std::uint64_t seed, Label cold_start);

struct EvalReport {
  std::string classifier;
  std::size_t n = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  std::vector<std::string> class_values;
  std::vector<std::vector<std::size_t>> confusion; // [true][predicted]
  double wall_time_seconds = 0.0;
  std::vector<Label> predictions; // filled when a trace is requested
};

/// Interleaved test-then-train over the whole stream: every instance is
/// predicted, scored, then used for training. Throws EmptyStream and
/// SchemaMismatch.
EvalReport prequential_eval(Classifier& classifier, const StreamDataset& ds,
                            bool keep_trace = false);

enum class Verdict { AbovePersistence, BelowPersistence, BelowMajority };

std::string_view to_string(Verdict verdict);

struct AuditVerdict {
  double subject = 0.0;
  double persistence_bar = 0.0;
  double independence_bar = 0.0;
  double majority_bar = 0.0;
  double margin = 0.0; // subject - persistence_bar
  Verdict verdict = Verdict::BelowPersistence;
};

/// Grades an accuracy figure against the naive bars of `labels`.
/// AbovePersistence needs subject > persistence bar strictly; below that,
/// subject < majority bar is BelowMajority. Throws EmptyStream and
/// InvalidArgument for subject outside [0, 1].
AuditVerdict audit_accuracy(double subject, std::span<const Label> labels,
                            const ColdStart& cold_start = {});
AuditVerdict audit_accuracy(double subject, const StreamDataset& ds,
                            const ColdStart& cold_start = {});

struct LogAudit {
  AuditVerdict verdict;
  EvalReport report;
};

/// Scores an external prediction log and audits its accuracy using the
/// log's true-label column for the bars. With a dataset, the true column
/// must equal the dataset labels (LabelMismatch at the first difference).
/// Throws EmptyLog.
LogAudit audit_prediction_log(const PredictionLog& log);
LogAudit audit_prediction_log(const PredictionLog& log, const StreamDataset& ds);

} // namespace streamaudit

#endif // STREAMAUDIT_EVAL_HPP
