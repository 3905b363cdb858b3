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

#ifndef STREAMAUDIT_BASELINES_HPP
#define STREAMAUDIT_BASELINES_HPP

#include "streamaudit/dataset.hpp"
#include "streamaudit/diagnostics.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace streamaudit {

/// Prequential incremental majority: each instance is predicted as the most
/// frequent class among the labels before it. Among tied classes the one
/// seen most recently wins; the first instance gets the cold-start
/// prediction. Throws EmptyStream.
double majority_baseline(std::span<const Label> labels, const ColdStart& cold_start = {});

/// Accuracy of always predicting the dataset's most frequent class (lowest
/// index on ties). Uses the whole stream, so it is a hindsight bar.
double always_majority_accuracy(std::span<const Label> labels);

struct RestartPolicy {
  double rho = 0.0;        // per-instance alarm probability
  std::uint64_t seed = 0;
};

/// Majority over a window that a random alarm clears.
///
/// Per instance t: predict the window majority (ties toward the most
/// recently seen class, cold start at t = 1), add label t to the window, then
/// draw one Bernoulli(rho); on an alarm the window is cleared and label t
/// re-inserted. rho = 0 is majority_baseline and rho = 1 is
/// persistence_accuracy, exactly. Throws EmptyStream, InvalidRho.
double random_restart_run(std::span<const Label> labels, const RestartPolicy& policy,
                          const ColdStart& cold_start = {});

/// Same run, returning the prediction made for every instance.
std::vector<Label> random_restart_trace(std::span<const Label> labels,
                                        const RestartPolicy& policy,
                                        const ColdStart& cold_start = {});

struct SweepConfig {
  std::vector<double> rho_grid; // strictly increasing, within [0, 1]
  std::size_t repetitions = 1;
  std::uint64_t master_seed = 42;
};

struct SweepRow {
  double rho = 0.0;
  std::size_t repetition = 0;
  std::uint64_t seed = 0;
  double accuracy = 0.0;
};

struct SweepSummary {
  double rho = 0.0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0; // sample standard deviation; 0 for one repetition
};

struct SweepResult {
  std::uint64_t master_seed = 0;
  std::vector<SweepRow> rows;        // rho-major, then repetition
  std::vector<SweepSummary> summary; // one per grid value
};

/// Inclusive grid lo, lo+step, ..., hi. `hi` is included (exactly) when
/// (hi - lo) is a whole multiple of step within 1e-9; otherwise the grid
/// stops at the last value not above hi.
std::vector<double> make_grid(double lo, double hi, double step);

/// Throws InvalidArgument unless the grid is non-empty, strictly increasing
/// and inside [0, 1] and repetitions >= 1.
void validate(const SweepConfig& config);

/// random_restart_run for every (rho, repetition) cell. Cell (i, r) is
/// seeded with derive_seed(master_seed, i, r), so the result does not depend
/// on `threads`.
SweepResult rho_sweep(std::span<const Label> labels, const SweepConfig& config,
                      const ColdStart& cold_start = {}, unsigned threads = 1);

} // namespace streamaudit

#endif // STREAMAUDIT_BASELINES_HPP
