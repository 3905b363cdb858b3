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

#include "oracles.hpp"

#include "streamaudit/diagnostics.hpp"
#include "streamaudit/error.hpp"
#include "streamaudit/random.hpp"
#include "streamaudit/synth.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>

using namespace streamaudit;

namespace {

constexpr Label D = label_at(0);
constexpr Label U = label_at(1);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::vector<Label> random_stream(Xoshiro256& rng, std::size_t n, std::size_t k) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(label_at(rng.below(k)));
  return out;
}

} // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("label distribution") {
  const std::vector<Label> six{D, U, U, D, D, D};
  const auto dist = label_distribution(six);
  CHECK(dist.n == 6);
  CHECK(dist.counts == std::vector<std::size_t>{4, 2});
  CHECK(dist.frequencies[0] == doctest::Approx(2.0 / 3.0));
  CHECK(dist.frequencies[1] == doctest::Approx(1.0 / 3.0));

  const std::vector<Label> one{U};
  CHECK(label_distribution(one).frequencies.back() == 1.0);
  CHECK(label_distribution(one, 3).counts == std::vector<std::size_t>{0, 1, 0});
  CHECK(code_of([] { label_distribution(std::vector<Label>{}); }) == ErrorCode::EmptyStream);
}

TEST_CASE("independence bar") {
  LabelDistribution elec_prior{45312, {0, 0}, {0.575, 0.425}};
  CHECK(independence_bar(elec_prior) == doctest::Approx(0.51125).epsilon(1e-12));

  LabelDistribution single{5, {5}, {1.0}};
  CHECK(independence_bar(single) == 1.0);

  for (std::size_t k = 1; k <= 6; ++k) {
    LabelDistribution uniform{k, std::vector<std::size_t>(k, 1),
                              std::vector<double>(k, 1.0 / static_cast<double>(k))};
    CHECK(independence_bar(uniform) == doctest::Approx(1.0 / static_cast<double>(k)));
  }
}

TEST_CASE("property: independence bar >= 1/k, equality iff uniform") {
  Xoshiro256 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + rng.below(4);
    auto labels = random_stream(rng, 1 + rng.below(40), k);
    const auto dist = label_distribution(labels, k);
    const double bar = independence_bar(dist);
    const bool uniform = std::all_of(dist.counts.begin(), dist.counts.end(),
                                     [&](std::size_t c) { return c == dist.counts[0]; });
    CHECK(bar >= 1.0 / static_cast<double>(k) - 1e-15);
    if (uniform)
      CHECK(bar == doctest::Approx(1.0 / static_cast<double>(k)));
    else
      CHECK(bar > 1.0 / static_cast<double>(k) + 1e-12);
    double sum = 0.0;
    for (double p : dist.frequencies)
      sum += p;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("persistence accuracy examples") {
  CHECK(persistence_accuracy(std::vector<Label>{D, D, D, D}, ColdStart::fixed(D)) == 1.0);
  // predictions D,D,U,U,D,D against D,U,U,D,D,D
  CHECK(persistence_accuracy(std::vector<Label>{D, U, U, D, D, D}, ColdStart::fixed(D)) ==
        doctest::Approx(4.0 / 6.0));
  CHECK(persistence_accuracy(std::vector<Label>{U}, ColdStart::schema_first()) == 0.0);
  CHECK(persistence_accuracy(std::vector<Label>{U}, ColdStart::global_majority()) == 1.0);
  CHECK(code_of([] { persistence_accuracy(std::vector<Label>{}); }) == ErrorCode::EmptyStream);
}

TEST_CASE("property: persistence = 1 - (alternations + cold miss)/n = pair-count oracle") {
  Xoshiro256 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 1 + rng.below(4);
    const auto labels = random_stream(rng, 1 + rng.below(60), k);
    const Label cold = label_at(rng.below(k));
    std::size_t alternations = 0;
    for (std::size_t t = 1; t < labels.size(); ++t)
      alternations += labels[t] != labels[t - 1];
    const double n = static_cast<double>(labels.size());
    const double formula = 1.0 - (static_cast<double>(alternations) + (labels[0] != cold)) / n;
    const double got = persistence_accuracy(labels, ColdStart::fixed(cold));
    CHECK(got == doctest::Approx(formula).epsilon(1e-15));
    CHECK(got == oracle::persistence(labels, cold).accuracy());
  }
}

TEST_CASE("autocorrelation of an alternating stream") {
  const std::vector<Label> alt{U, D, U, D, U, D, U, D};
  const auto acf = autocorrelation(alt, 2);
  REQUIRE(acf.values.size() == 2);
  CHECK(acf.lags == std::vector<std::size_t>{1, 2});
  // mean 1/2, deviations +-1/2, denominator 8/4 = 2;
  // r(1) = 7 * (-1/4) / 2, r(2) = 6 * (1/4) / 2
  CHECK(acf.values[0] == doctest::Approx(-0.875).epsilon(1e-15));
  CHECK(acf.values[1] == doctest::Approx(0.75).epsilon(1e-15));
  const auto brute = oracle::acf(alt, 2);
  CHECK(acf.values[0] == doctest::Approx(brute[0]).epsilon(1e-15));
}

TEST_CASE("autocorrelation errors") {
  CHECK(code_of([] { autocorrelation(std::vector<Label>{D, D, D, D}, 1); }) ==
        ErrorCode::ZeroVariance);
  CHECK(code_of([] { autocorrelation(std::vector<Label>{D, U, label_at(2), D}, 1); }) ==
        ErrorCode::NotBinary);
  CHECK(code_of([] { autocorrelation(std::vector<Label>{D, U, D}, 3); }) ==
        ErrorCode::LagTooLarge);
  CHECK(code_of([] { autocorrelation(std::vector<Label>{D, U, D}, 0); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { autocorrelation(std::vector<Label>{}, 3); }) == ErrorCode::EmptyStream);
}

TEST_CASE("property: ACF formula equals brute-force double loop within 1e-12") {
  Xoshiro256 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng.below(trial < 35 ? 200 : 998);
    auto labels = random_stream(rng, n, 2);
    if (std::count(labels.begin(), labels.end(), labels[0]) == static_cast<long>(n))
      labels[0] = labels[0] == D ? U : D;
    const std::size_t lag = 1 + rng.below(std::min<std::size_t>(n - 1, 12));
    const auto got = autocorrelation(labels, lag);
    const auto want = oracle::acf(labels, lag);
    for (std::size_t k = 0; k < lag; ++k) {
      CHECK(std::abs(got.values[k] - want[k]) <= 1e-12);
      CHECK(std::abs(got.values[k]) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("ACF with worker threads is bitwise identical") {
  const auto labels = gen_markov_labels(MarkovLabelModel(0.4, 0.7, 5000, 3));
  const auto one = autocorrelation(labels, 97, 1);
  for (unsigned threads : {2u, 3u, 8u, 200u}) {
    const auto many = autocorrelation(labels, 97, threads);
    CHECK(many.lags == one.lags);
    CHECK(std::memcmp(many.values.data(), one.values.data(), one.values.size() * sizeof(double)) == 0);
  }
}

TEST_CASE("run lengths") {
  const auto r = run_lengths(std::vector<Label>{D, U, U, D, D, D});
  CHECK(r.overall.count == 3);
  CHECK(r.overall.mean == 2.0);
  CHECK(r.overall.max == 3);
  CHECK(r.per_class[0].count == 2);
  CHECK(r.per_class[0].max == 3);
  CHECK(r.per_class[0].mean == 2.0);
  CHECK(r.per_class[1].count == 1);

  const auto c = run_lengths(std::vector<Label>(7, U));
  CHECK(c.overall.count == 1);
  CHECK(c.overall.mean == 7.0);
  CHECK(c.overall.max == 7);
  CHECK(c.per_class[0].count == 0);
  CHECK(code_of([] { run_lengths(std::vector<Label>{}); }) == ErrorCode::EmptyStream);
}

TEST_CASE("property: run lengths sum to n and max >= mean") {
  Xoshiro256 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto labels = random_stream(rng, 1 + rng.below(80), 1 + rng.below(3));
    const auto r = run_lengths(labels);
    std::size_t total = 0;
    for (const auto& c : r.per_class)
      total += static_cast<std::size_t>(std::llround(c.mean * static_cast<double>(c.count)));
    CHECK(total == labels.size());
    CHECK(static_cast<double>(r.overall.max) >= r.overall.mean);
    CHECK(r.overall.mean * static_cast<double>(r.overall.count) ==
          doctest::Approx(static_cast<double>(labels.size())));
  }
}

TEST_CASE("iid p=0.58 mean run length lies in [1.9, 2.2] for 20 seeds") {
  // analytic n / (1 + (n-1) 2pq) ~ 1/(2 * 0.58 * 0.42) = 2.0525
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto labels = gen_iid_labels(0.58, 45312, seed);
    const double mean = run_lengths(labels).overall.mean;
    CHECK(mean >= 1.9);
    CHECK(mean <= 2.2);
    CHECK(mean == doctest::Approx(2.0525).epsilon(0.03));
  }
}

TEST_CASE("diagnose: single instance omits the ACF") {
  const auto ds = labels_to_dataset(std::vector<Label>{U});
  const auto report = diagnose(ds, 10);
  CHECK(report.run_lengths.overall.count == 1);
  CHECK(report.run_lengths.overall.mean == 1.0);
  CHECK(report.run_lengths.overall.max == 1);
  CHECK_FALSE(report.acf.has_value());
  CHECK(report.acf_error.find("ZeroVariance") == 0);
  CHECK(report.persistence_bar == 0.0); // cold start predicts class "0"
  CHECK(report.independence_bar == 1.0);
}

TEST_CASE("diagnose on iid p=0.58: persistence within 0.01 of independence bar") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const auto ds = labels_to_dataset(gen_iid_labels(0.58, 45312, seed));
    const auto report = diagnose(ds, 5);
    REQUIRE(report.acf.has_value());
    CHECK(std::abs(report.persistence_bar - report.independence_bar) < 0.01);
    CHECK(std::abs(report.independence_bar - 0.5128) < 0.01);
  }
  CHECK_THROWS_AS(diagnose(labels_to_dataset(std::vector<Label>{}), 3), Error);
}

TEST_CASE("shuffling an autocorrelated stream closes the persistence gap") {
  auto labels = gen_markov_labels(MarkovLabelModel(0.425, 0.7, 45312, 9));
  const double bar = independence_bar(label_distribution(labels));
  CHECK(persistence_accuracy(labels) - bar > 0.3);
  Xoshiro256 rng(1234);
  for (std::size_t i = labels.size() - 1; i > 0; --i)
    std::swap(labels[i], labels[rng.below(i + 1)]);
  CHECK(std::abs(persistence_accuracy(labels) - bar) < 0.01);
}

} // TEST_SUITE
