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

#include "streamaudit/error.hpp"
#include "streamaudit/eval.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace streamaudit {

namespace {

Label windowed_majority(const std::vector<std::size_t>& counts,
                        const std::vector<std::size_t>& last_seen) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c)
    if (counts[c] > counts[best] ||
        (counts[c] == counts[best] && last_seen[c] > last_seen[best]))
      best = c;
  return label_at(best);
}

} // namespace

// ---------------------------------------------------------------------------
// NaiveBayes

NaiveBayes::NaiveBayes(Schema schema)
    : Classifier(std::move(schema)),
      num_classes_(this->schema().num_classes()),
      num_features_(this->schema().num_features()) {
  reset();
}

void NaiveBayes::reset() {
  seen_ = 0;
  class_counts_.assign(num_classes_, 0);
  gaussians_.assign(num_classes_ * num_features_, Gaussian{});
  tables_.assign(num_classes_ * num_features_, {});
  for (std::size_t c = 0; c < num_classes_; ++c)
    for (std::size_t f = 0; f < num_features_; ++f) {
      const auto& attr = schema().feature(f);
      if (attr.is_nominal())
        tables_[c * num_features_ + f].assign(attr.values.size(), 0);
    }
}

void NaiveBayes::update(std::span<const double> features, Label label) {
  const std::size_t c = index_of(label);
  ++seen_;
  ++class_counts_.at(c);
  for (std::size_t f = 0; f < num_features_; ++f) {
    const double x = features[f];
    if (schema().feature(f).is_nominal()) {
      ++tables_[c * num_features_ + f].at(static_cast<std::size_t>(x));
      continue;
    }
    // Welford
    auto& g = gaussians_[c * num_features_ + f];
    g.count += 1.0;
    const double delta = x - g.mean;
    g.mean += delta / g.count;
    g.m2 += delta * (x - g.mean);
  }
}

std::vector<double> NaiveBayes::log_scores(std::span<const double> features) const {
  std::vector<double> scores(num_classes_, -std::numeric_limits<double>::infinity());
  if (seen_ == 0) {
    std::fill(scores.begin(), scores.end(), 0.0);
    return scores;
  }
  const double total = static_cast<double>(seen_ + num_classes_);
  for (std::size_t c = 0; c < num_classes_; ++c) {
    if (class_counts_[c] == 0)
      continue;
    const double nc = static_cast<double>(class_counts_[c]);
    double score = std::log((nc + 1.0) / total);
    for (std::size_t f = 0; f < num_features_; ++f) {
      const auto& attr = schema().feature(f);
      if (attr.is_nominal()) {
        const auto& table = tables_[c * num_features_ + f];
        const auto v = static_cast<std::size_t>(features[f]);
        const double hits = v < table.size() ? static_cast<double>(table[v]) : 0.0;
        score += std::log((hits + 1.0) / (nc + static_cast<double>(table.size())));
        continue;
      }
      const auto& g = gaussians_[c * num_features_ + f];
      double var = g.count > 1.0 ? g.m2 / (g.count - 1.0) : 0.0;
      var = std::max(var, kVarianceFloor);
      const double d = features[f] - g.mean;
      score += -0.5 * std::log(2.0 * std::numbers::pi * var) - d * d / (2.0 * var);
    }
    scores[c] = score;
  }
  return scores;
}

Label NaiveBayes::argmax(std::span<const double> scores) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c)
    if (scores[c] > scores[best])
      best = c;
  return label_at(best);
}

Label NaiveBayes::predict(std::span<const double> features) const {
  return argmax(log_scores(features));
}

// ---------------------------------------------------------------------------
// MajorityClassifier

MajorityClassifier::MajorityClassifier(Schema schema, Label cold_start)
    : Classifier(std::move(schema)), cold_start_(cold_start) {
  reset();
}

void MajorityClassifier::reset() {
  t_ = 0;
  counts_.assign(schema().num_classes(), 0);
  last_seen_.assign(schema().num_classes(), 0);
}

Label MajorityClassifier::predict(std::span<const double>) const {
  return t_ == 0 ? cold_start_ : windowed_majority(counts_, last_seen_);
}

void MajorityClassifier::update(std::span<const double>, Label label) {
  ++t_;
  ++counts_.at(index_of(label));
  last_seen_[index_of(label)] = t_;
}

// ---------------------------------------------------------------------------
// PersistenceClassifier

PersistenceClassifier::PersistenceClassifier(Schema schema, Label cold_start)
    : Classifier(std::move(schema)), cold_start_(cold_start), previous_(cold_start) {}

void PersistenceClassifier::reset() {
  previous_ = cold_start_;
  has_previous_ = false;
}

Label PersistenceClassifier::predict(std::span<const double>) const {
  return has_previous_ ? previous_ : cold_start_;
}

void PersistenceClassifier::update(std::span<const double>, Label label) {
  previous_ = label;
  has_previous_ = true;
}

// ---------------------------------------------------------------------------
// RestartClassifier

RestartClassifier::RestartClassifier(Schema schema, double rho, std::uint64_t seed,
                                     Label cold_start)
    : Classifier(std::move(schema)), rho_(rho), seed_(seed), cold_start_(cold_start),
      rng_(seed) {
  if (!(rho >= 0.0 && rho <= 1.0))
    fail(ErrorCode::InvalidRho, "rho must lie in [0, 1], got " + std::to_string(rho));
  reset();
}

std::string RestartClassifier::name() const {
  return "restart:" + detail::format_real(rho_);
}

void RestartClassifier::reset() {
  rng_.reseed(seed_);
  t_ = 0;
  window_size_ = 0;
  previous_ = cold_start_;
  window_.assign(schema().num_classes(), 0);
  last_seen_.assign(schema().num_classes(), 0);
}

Label RestartClassifier::predict(std::span<const double>) const {
  if (t_ == 0)
    return cold_start_;
  if (window_size_ == 0)
    return previous_;
  return windowed_majority(window_, last_seen_);
}

void RestartClassifier::update(std::span<const double>, Label label) {
  const std::size_t y = index_of(label);
  ++t_;
  ++window_.at(y);
  ++window_size_;
  last_seen_[y] = t_;
  previous_ = label;
  if (rng_.bernoulli(rho_)) {
    std::fill(window_.begin(), window_.end(), 0);
    window_[y] = 1;
    window_size_ = 1;
  }
}

// ---------------------------------------------------------------------------

std::unique_ptr<Classifier> make_classifier(std::string_view spec, const Schema& schema,
                                            std::uint64_t seed, Label cold_start) {
  if (spec == "naive-bayes")
    return std::make_unique<NaiveBayes>(schema);
  if (spec == "majority")
    return std::make_unique<MajorityClassifier>(schema, cold_start);
  if (spec == "persistence")
    return std::make_unique<PersistenceClassifier>(schema, cold_start);
  constexpr std::string_view restart = "restart:";
  if (spec.starts_with(restart)) {
    const auto rho = detail::parse_real(spec.substr(restart.size()));
    if (!rho)
      fail(ErrorCode::InvalidArgument, "bad rho in learner '" + std::string(spec) + "'");
    return std::make_unique<RestartClassifier>(schema, *rho, seed, cold_start);
  }
  fail(ErrorCode::InvalidArgument,
       "unknown learner '" + std::string(spec) +
           "' (expected naive-bayes, majority, persistence or restart:RHO)");
}

} // namespace streamaudit
