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

#ifndef STREAMAUDIT_SYNTH_HPP
#define STREAMAUDIT_SYNTH_HPP

#include "streamaudit/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace streamaudit {

/// Two-state label chain with stationary distribution (1 - prior, prior) over
/// classes {0, 1} and lag-1 autocorrelation `lag1`. The per-state stay
/// probabilities solve
///   stay1 = prior + (1 - prior) * lag1
///   stay0 = (1 - prior) + prior * lag1
/// and must both lie in [0, 1); lag1 = 0 is the iid chain.
class MarkovLabelModel {
public:
  /// Throws InvalidModel for prior outside (0, 1) or an infeasible lag1.
  MarkovLabelModel(double prior, double lag1, std::size_t n, std::uint64_t seed);

  /// Model whose overall probability of repeating the previous label is
  /// `stay`. For prior 0.5 this is lag1 = 2 * stay - 1.
  static MarkovLabelModel from_stay(double prior, double stay, std::size_t n,
                                    std::uint64_t seed);

  double prior() const noexcept { return prior_; }
  double lag1() const noexcept { return lag1_; }
  double stay_in_one() const noexcept { return stay1_; }
  double stay_in_zero() const noexcept { return stay0_; }
  std::size_t size() const noexcept { return n_; }
  std::uint64_t seed() const noexcept { return seed_; }

private:
  double prior_;
  double lag1_;
  double stay1_;
  double stay0_;
  std::size_t n_;
  std::uint64_t seed_;
};

/// Label 1 drawn from the prior, then one uniform draw per transition.
/// Throws InvalidArgument for n == 0.
std::vector<Label> gen_markov_labels(const MarkovLabelModel& model);

/// n independent Bernoulli(p) labels over {0, 1}. Throws InvalidArgument for
/// p outside [0, 1] or n == 0.
std::vector<Label> gen_iid_labels(double p, std::size_t n, std::uint64_t seed);

/// Label-only stream with class values {"0", "1"} and one constant numeric
/// feature named "const".
StreamDataset labels_to_dataset(std::span<const Label> labels);

/// Single-column CSV with a "label" header, preceded by "# seed=<seed>" when
/// a seed is given.
void write_label_csv(std::ostream& out, std::span<const Label> labels,
                     std::optional<std::uint64_t> seed = std::nullopt);

} // namespace streamaudit

#endif // STREAMAUDIT_SYNTH_HPP
