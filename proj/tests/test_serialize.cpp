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

#include "streamaudit/serialize.hpp"
#include "streamaudit/synth.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace streamaudit;
using nlohmann::json;

namespace {

std::vector<std::string> keys(const std::string& text) {
  std::vector<std::string> out;
  const auto j = nlohmann::ordered_json::parse(text);
  for (auto& [k, v] : j.items())
    out.push_back(k);
  return out;
}

const std::vector<Label> kSix{label_at(0), label_at(1), label_at(1),
                              label_at(0), label_at(0), label_at(0)};

} // namespace

TEST_SUITE("serialize") {

TEST_CASE("summary JSON") {
  const auto j = json::parse(summary_json(dataset_summary(labels_to_dataset(kSix))));
  CHECK(j["n_instances"] == 6);
  CHECK(j["n_features"] == 1);
  CHECK(j["class_values"] == json::array({"0", "1"}));
  CHECK(j["class_counts"] == json::array({4, 2}));
}

TEST_CASE("diagnostics JSON with and without ACF") {
  const auto report = diagnose(labels_to_dataset(kSix), 2);
  const std::string text = diagnostics_json(report);
  CHECK(keys(text) == std::vector<std::string>{"n", "class_priors", "independence_bar",
                                               "persistence_bar", "run_lengths", "acf"});
  const auto j = json::parse(text);
  CHECK(j["class_priors"]["0"].get<double>() == doctest::Approx(2.0 / 3.0));
  CHECK(j["run_lengths"]["count"] == 3);
  CHECK(j["acf"].size() == 2);

  const auto flat = json::parse(diagnostics_json(diagnose(labels_to_dataset(std::vector<Label>(4, label_at(1))), 2)));
  CHECK(flat["acf"].is_null());
  CHECK(flat["acf_error"].get<std::string>().starts_with("ZeroVariance"));
}

TEST_CASE("ACF CSV") {
  std::ostringstream out;
  write_acf_csv(out, AcfSeries{{1, 2}, {-0.875, 0.75}});
  CHECK(out.str() == "lag,acf\n1,-0.875\n2,0.75\n");
}

TEST_CASE("sweep CSVs carry the seed") {
  const auto result = rho_sweep(kSix, {{0.0, 0.5, 1.0}, 2, 42});
  std::ostringstream rows;
  write_sweep_csv(rows, result);
  std::istringstream in(rows.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "# seed=42");
  std::getline(in, line);
  CHECK(line == "rho,rep,accuracy");
  int n = 0;
  while (std::getline(in, line))
    ++n;
  CHECK(n == 6);

  std::ostringstream summary;
  write_sweep_summary_csv(summary, result);
  CHECK(summary.str().starts_with("# seed=42\nrho,mean,min,max,stddev\n0,"));
  CHECK(format_rho(0.30000000000000004) == "0.3");
  CHECK(format_rho(1.0) == "1");
}

TEST_CASE("eval report JSON") {
  const auto ds = labels_to_dataset(kSix);
  PersistenceClassifier p(ds.schema, label_at(0));
  const auto report = prequential_eval(p, ds);
  const auto plain = eval_report_json(report, false);
  CHECK(keys(plain) == std::vector<std::string>{"learner", "n", "correct", "accuracy", "confusion"});
  const auto j = json::parse(plain);
  CHECK(j["learner"] == "persistence");
  CHECK(j["correct"] == 4);
  CHECK(j["confusion"]["classes"] == json::array({"0", "1"}));
  CHECK(j["confusion"]["counts"] == json::parse("[[3,1],[1,1]]"));

  const auto timed = json::parse(eval_report_json(report, true, 7));
  CHECK(timed["seed"] == 7);
  CHECK(timed.contains("wall_time_seconds"));
}

TEST_CASE("audit JSON field names") {
  const auto v = audit_accuracy(0.9, kSix);
  const auto text = audit_json(v, 6);
  CHECK(keys(text) == std::vector<std::string>{"n", "accuracy", "confusion", "bars", "margin", "verdict"});
  const auto j = json::parse(text);
  CHECK(j["confusion"].is_null());
  CHECK(j["verdict"] == "AbovePersistence");
  CHECK(j["bars"]["persistence"].get<double>() == doctest::Approx(4.0 / 6.0));
  CHECK(j["bars"].contains("majority"));
  CHECK(j["bars"].contains("independence"));
  CHECK(j["margin"].get<double>() == doctest::Approx(0.9 - 4.0 / 6.0));
}

} // TEST_SUITE
