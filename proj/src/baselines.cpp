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

#include "streamaudit/baselines.hpp"
#include "streamaudit/error.hpp"
#include "streamaudit/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace streamaudit {

namespace {

std::size_t label_space(std::span<const Label> labels) {
  std::size_t k = 0;
  for (Label l : labels)
    k = std::max(k, index_of(l) + 1);
  return k;
}

// Class with the highest count; ties go to the class seen most recently.
// `last_seen` holds 1 + time of the latest occurrence, 0 for never.
Label majority_of(const std::vector<std::size_t>& counts,
                  const std::vector<std::size_t>& last_seen) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] > counts[best] ||
        (counts[c] == counts[best] && last_seen[c] > last_seen[best]))
      best = c;
  }
  return label_at(best);
}

void check_policy(const RestartPolicy& policy) {
  if (!(policy.rho >= 0.0 && policy.rho <= 1.0))
    fail(ErrorCode::InvalidRho,
         "rho must lie in [0, 1], got " + std::to_string(policy.rho));
}

} // namespace

double majority_baseline(std::span<const Label> labels, const ColdStart& cold_start) {
  if (labels.empty())
    fail(ErrorCode::EmptyStream, "label stream is empty");
  const std::size_t k = label_space(labels);
  std::vector<std::size_t> counts(k, 0), last_seen(k, 0);
  std::size_t correct = 0;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const Label predicted = t == 0 ? cold_start.resolve(labels) : majority_of(counts, last_seen);
    correct += predicted == labels[t] ? 1 : 0;
    ++counts[index_of(labels[t])];
    last_seen[index_of(labels[t])] = t + 1;
  }
  return static_cast<double>(correct) / static_cast<double>(labels.size());
}

double always_majority_accuracy(std::span<const Label> labels) {
  const auto dist = label_distribution(labels);
  return *std::max_element(dist.frequencies.begin(), dist.frequencies.end());
}

std::vector<Label> random_restart_trace(std::span<const Label> labels,
                                        const RestartPolicy& policy,
                                        const ColdStart& cold_start) {
  if (labels.empty())
    fail(ErrorCode::EmptyStream, "label stream is empty");
  check_policy(policy);

  const std::size_t k = label_space(labels);
  std::vector<std::size_t> window(k, 0), last_seen(k, 0);
  std::size_t window_size = 0;
  Xoshiro256 rng(policy.seed);
  std::vector<Label> predictions;
  predictions.reserve(labels.size());

  for (std::size_t t = 0; t < labels.size(); ++t) {
    Label predicted;
    if (t == 0)
      predicted = cold_start.resolve(labels);
    else if (window_size == 0)
      predicted = labels[t - 1];
    else
      predicted = majority_of(window, last_seen);
    predictions.push_back(predicted);

    const std::size_t y = index_of(labels[t]);
    ++window[y];
    ++window_size;
    last_seen[y] = t + 1;

    if (rng.bernoulli(policy.rho)) {
      std::fill(window.begin(), window.end(), 0);
      window[y] = 1;
      window_size = 1;
    }
  }
  return predictions;
}

double random_restart_run(std::span<const Label> labels, const RestartPolicy& policy,
                          const ColdStart& cold_start) {
  const auto predictions = random_restart_trace(labels, policy, cold_start);
  std::size_t correct = 0;
  for (std::size_t t = 0; t < labels.size(); ++t)
    correct += predictions[t] == labels[t] ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(labels.size());
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !std::isfinite(step))
    fail(ErrorCode::InvalidArgument, "grid step must be positive");
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
    fail(ErrorCode::InvalidArgument, "grid needs LO <= HI");
  const double span = hi - lo;
  const double whole = std::round(span / step);
  std::vector<double> grid;
  if (std::abs(whole * step - span) <= 1e-9) {
    const auto count = static_cast<std::size_t>(whole);
    for (std::size_t i = 0; i < count; ++i)
      grid.push_back(lo + static_cast<double>(i) * step);
    grid.push_back(hi);
  } else {
    const auto count = static_cast<std::size_t>(std::floor(span / step));
    for (std::size_t i = 0; i <= count; ++i)
      grid.push_back(lo + static_cast<double>(i) * step);
  }
  return grid;
}

void validate(const SweepConfig& config) {
  if (config.rho_grid.empty())
    fail(ErrorCode::InvalidArgument, "rho grid is empty");
  if (config.repetitions == 0)
    fail(ErrorCode::InvalidArgument, "repetitions must be at least 1");
  for (std::size_t i = 0; i < config.rho_grid.size(); ++i) {
    const double rho = config.rho_grid[i];
    if (!(rho >= 0.0 && rho <= 1.0))
      fail(ErrorCode::InvalidRho, "grid value " + std::to_string(rho) + " outside [0, 1]");
    if (i > 0 && !(rho > config.rho_grid[i - 1]))
      fail(ErrorCode::InvalidArgument, "grid values must be strictly increasing");
  }
}

SweepResult rho_sweep(std::span<const Label> labels, const SweepConfig& config,
                      const ColdStart& cold_start, unsigned threads) {
  validate(config);
  if (labels.empty())
    fail(ErrorCode::EmptyStream, "label stream is empty");

  const std::size_t reps = config.repetitions;
  SweepResult result;
  result.master_seed = config.master_seed;
  result.rows.resize(config.rho_grid.size() * reps);
  for (std::size_t i = 0; i < config.rho_grid.size(); ++i)
    for (std::size_t r = 0; r < reps; ++r)
      result.rows[i * reps + r] = {config.rho_grid[i], r,
                                   derive_seed(config.master_seed, i, r), 0.0};

  // Resolving once keeps GlobalMajority from recounting per cell.
  const ColdStart first = ColdStart::fixed(cold_start.resolve(labels));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t cell = next++; cell < result.rows.size(); cell = next++) {
      auto& row = result.rows[cell];
      row.accuracy = random_restart_run(labels, {row.rho, row.seed}, first);
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, result.rows.size());
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < config.rho_grid.size(); ++i) {
    SweepSummary s;
    s.rho = config.rho_grid[i];
    s.min = s.max = result.rows[i * reps].accuracy;
    double sum = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
      const double a = result.rows[i * reps + r].accuracy;
      sum += a;
      s.min = std::min(s.min, a);
      s.max = std::max(s.max, a);
    }
    s.mean = sum / static_cast<double>(reps);
    if (reps > 1) {
      double sq = 0.0;
      for (std::size_t r = 0; r < reps; ++r) {
        const double d = result.rows[i * reps + r].accuracy - s.mean;
        sq += d * d;
      }
      s.stddev = std::sqrt(sq / static_cast<double>(reps - 1));
    }
    result.summary.push_back(s);
  }
  return result;
}

} // namespace streamaudit
