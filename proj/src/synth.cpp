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

#include "streamaudit/synth.hpp"
#include "streamaudit/error.hpp"
#include "streamaudit/random.hpp"

#include <cmath>
#include <ostream>

namespace streamaudit {

MarkovLabelModel::MarkovLabelModel(double prior, double lag1, std::size_t n,
                                   std::uint64_t seed)
    : prior_(prior), lag1_(lag1), n_(n), seed_(seed) {
  if (!(prior > 0.0 && prior < 1.0))
    fail(ErrorCode::InvalidModel, "prior must lie strictly inside (0, 1)");
  if (!std::isfinite(lag1))
    fail(ErrorCode::InvalidModel, "lag-1 autocorrelation must be finite");
  stay1_ = prior + (1.0 - prior) * lag1;
  stay0_ = (1.0 - prior) + prior * lag1;
  if (!(stay1_ >= 0.0 && stay1_ < 1.0 && stay0_ >= 0.0 && stay0_ < 1.0))
    fail(ErrorCode::InvalidModel,
         "lag-1 autocorrelation " + std::to_string(lag1) +
             " is infeasible for prior " + std::to_string(prior));
}

MarkovLabelModel MarkovLabelModel::from_stay(double prior, double stay, std::size_t n,
                                             std::uint64_t seed) {
  if (!(prior > 0.0 && prior < 1.0))
    fail(ErrorCode::InvalidModel, "prior must lie strictly inside (0, 1)");
  // P(repeat) = p^2 + q^2 + 2pq * lag1
  const double q = 1.0 - prior;
  const double lag1 = (stay - (prior * prior + q * q)) / (2.0 * prior * q);
  return MarkovLabelModel(prior, lag1, n, seed);
}

std::vector<Label> gen_markov_labels(const MarkovLabelModel& model) {
  if (model.size() == 0)
    fail(ErrorCode::InvalidArgument, "n must be at least 1");
  Xoshiro256 rng(model.seed());
  std::vector<Label> labels;
  labels.reserve(model.size());
  bool one = rng.bernoulli(model.prior());
  labels.push_back(label_at(one ? 1 : 0));
  for (std::size_t t = 1; t < model.size(); ++t) {
    const bool stay = rng.bernoulli(one ? model.stay_in_one() : model.stay_in_zero());
    one = stay ? one : !one;
    labels.push_back(label_at(one ? 1 : 0));
  }
  return labels;
}

std::vector<Label> gen_iid_labels(double p, std::size_t n, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
  if (n == 0)
    fail(ErrorCode::InvalidArgument, "n must be at least 1");
  Xoshiro256 rng(seed);
  std::vector<Label> labels;
  labels.reserve(n);
  for (std::size_t t = 0; t < n; ++t)
    labels.push_back(label_at(rng.bernoulli(p) ? 1 : 0));
  return labels;
}

StreamDataset labels_to_dataset(std::span<const Label> labels) {
  StreamDataset ds;
  ds.relation = "synthetic";
  ds.schema.attributes = {Attribute::numeric("const"),
                          Attribute::nominal("label", {"0", "1"})};
  ds.schema.class_index = 1;
  ds.instances.reserve(labels.size());
  for (Label l : labels)
    ds.instances.push_back({{0.0}, l});
  return ds;
}

void write_label_csv(std::ostream& out, std::span<const Label> labels,
                     std::optional<std::uint64_t> seed) {
  if (seed)
    out << "# seed=" << *seed << '\n';
  out << "label\n";
  for (Label l : labels)
    out << index_of(l) << '\n';
}

} // namespace streamaudit
