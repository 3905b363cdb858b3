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

#include "streamaudit/streamaudit.h"

#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { sa_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Dataset {
  sa_dataset* p = nullptr;
  ~Dataset() { sa_dataset_free(p); }
};

const char kArff[] = "@relation t\n"
                     "@attribute x numeric\n"
                     "@attribute class {DOWN,UP}\n"
                     "@data\n"
                     "1,DOWN\n2,UP\n3,UP\n4,DOWN\n5,DOWN\n6,DOWN\n";

} // namespace

TEST_SUITE("c_api") {

TEST_CASE("version and status names") {
  CHECK(std::string(sa_version()) == "0.1.0");
  CHECK(std::string(sa_status_name(SA_OK)) == "OK");
  CHECK(std::string(sa_status_name(SA_ERR_EMPTY_STREAM)) == "EmptyStream");
  CHECK(std::string(sa_status_name(SA_ERR_LABEL_MISMATCH)) == "LabelMismatch");
}

TEST_CASE("parse and inspect a dataset") {
  Dataset ds;
  REQUIRE(sa_dataset_parse(kArff, sizeof kArff - 1, SA_FORMAT_AUTO, &ds.p) == SA_OK);
  size_t n = 0, k = 0;
  CHECK(sa_dataset_size(ds.p, &n) == SA_OK);
  CHECK(sa_dataset_num_classes(ds.p, &k) == SA_OK);
  CHECK(n == 6);
  CHECK(k == 2);
  std::vector<uint32_t> labels(6);
  CHECK(sa_dataset_labels(ds.p, labels.data(), labels.size()) == SA_OK);
  CHECK(labels == std::vector<uint32_t>{0, 1, 1, 0, 0, 0});
  CHECK(sa_dataset_labels(ds.p, labels.data(), 3) == SA_ERR_INVALID_ARGUMENT);
  const char* name = nullptr;
  CHECK(sa_dataset_class_value(ds.p, 1, &name) == SA_OK);
  CHECK(std::string(name) == "UP");
  CHECK(sa_dataset_class_value(ds.p, 2, &name) == SA_ERR_INVALID_ARGUMENT);

  double v = 0;
  CHECK(sa_persistence_accuracy(ds.p, &v) == SA_OK);
  CHECK(v == doctest::Approx(4.0 / 6.0));
  CHECK(sa_majority_accuracy(ds.p, &v) == SA_OK);
  CHECK(v == doctest::Approx(4.0 / 6.0));
  CHECK(sa_independence_bar(ds.p, &v) == SA_OK);
  CHECK(v == doctest::Approx(5.0 / 9.0));
  CHECK(sa_restart_accuracy(ds.p, 1.0, 3, &v) == SA_OK);
  CHECK(v == doctest::Approx(4.0 / 6.0));

  Owned arff;
  CHECK(sa_dataset_to_arff(ds.p, &arff.p) == SA_OK);
  Dataset again;
  CHECK(sa_dataset_parse(arff.p, std::strlen(arff.p), SA_FORMAT_ARFF, &again.p) == SA_OK);
}

TEST_CASE("errors set status and last error") {
  Dataset ds;
  const char bad[] = "@relation t\n@attribute c {a,b}\n@data\na,b\n";
  CHECK(sa_dataset_parse(bad, sizeof bad - 1, SA_FORMAT_ARFF, &ds.p) == SA_ERR_PARSE);
  CHECK(ds.p == nullptr);
  CHECK(std::string(sa_last_error()).find("line 4") != std::string::npos);

  CHECK(sa_dataset_load("/nonexistent/file.arff", SA_FORMAT_AUTO, &ds.p) == SA_ERR_IO);
  CHECK(std::string(sa_last_error()).find("/nonexistent/file.arff") != std::string::npos);

  const char sparse[] = "@relation t\n@attribute c {a,b}\n@data\n{0 a}\n";
  CHECK(sa_dataset_parse(sparse, sizeof sparse - 1, SA_FORMAT_ARFF, &ds.p) ==
        SA_ERR_UNSUPPORTED_FEATURE);

  double v = 0;
  CHECK(sa_persistence_accuracy(nullptr, &v) == SA_ERR_INVALID_ARGUMENT);
  CHECK(sa_dataset_parse(nullptr, 3, SA_FORMAT_ARFF, &ds.p) == SA_ERR_INVALID_ARGUMENT);

  Dataset empty;
  const char header_only[] = "@relation t\n@attribute c {a,b}\n@data\n";
  REQUIRE(sa_dataset_parse(header_only, sizeof header_only - 1, SA_FORMAT_AUTO, &empty.p) == SA_OK);
  Owned csv;
  CHECK(sa_acf_csv(empty.p, 10, 1, &csv.p) == SA_ERR_EMPTY_STREAM);
  CHECK(csv.p == nullptr);
  CHECK(sa_persistence_accuracy(empty.p, &v) == SA_ERR_EMPTY_STREAM);

  sa_dataset_free(nullptr);
  sa_string_free(nullptr);
}

TEST_CASE("labels, synth and ACF") {
  const uint32_t labels[] = {1, 0, 1, 0, 1, 0, 1, 0};
  Dataset ds;
  REQUIRE(sa_dataset_from_labels(labels, 8, &ds.p) == SA_OK);
  Owned acf;
  REQUIRE(sa_acf_csv(ds.p, 2, 2, &acf.p) == SA_OK);
  CHECK(acf.str() == "lag,acf\n1,-0.875\n2,0.75\n");
  Owned big;
  CHECK(sa_acf_csv(ds.p, 8, 1, &big.p) == SA_ERR_LAG_TOO_LARGE);

  const uint32_t three[] = {0, 1, 2};
  Dataset multi;
  REQUIRE(sa_dataset_from_labels(three, 3, &multi.p) == SA_OK);
  CHECK(sa_acf_csv(multi.p, 1, 1, &big.p) == SA_ERR_NOT_BINARY);

  Dataset m;
  CHECK(sa_synth_markov(1000, 0.5, 0.8, 9, &m.p) == SA_OK);
  Dataset bad;
  CHECK(sa_synth_markov(10, 1.0, 0.0, 9, &bad.p) == SA_ERR_INVALID_MODEL);
  Dataset iid;
  CHECK(sa_synth_iid(100, 0.3, 9, &iid.p) == SA_OK);
  Owned out;
  const uint64_t seed = 9;
  CHECK(sa_dataset_to_label_csv(iid.p, &seed, &out.p) == SA_OK);
  CHECK(out.str().rfind("# seed=9\nlabel\n", 0) == 0);
}

TEST_CASE("grid and sweep") {
  size_t len = 0;
  CHECK(sa_make_grid(0, 1, 0.25, nullptr, 0, &len) == SA_OK);
  CHECK(len == 5);
  std::vector<double> grid(len);
  CHECK(sa_make_grid(0, 1, 0.25, grid.data(), grid.size(), &len) == SA_OK);
  CHECK(grid.back() == 1.0);
  CHECK(sa_make_grid(0, 1, -1, nullptr, 0, &len) == SA_ERR_INVALID_ARGUMENT);

  Dataset ds;
  REQUIRE(sa_dataset_parse(kArff, sizeof kArff - 1, SA_FORMAT_ARFF, &ds.p) == SA_OK);
  Owned rows, summary;
  REQUIRE(sa_sweep_csv(ds.p, grid.data(), grid.size(), 2, 42, 1, &rows.p, &summary.p) == SA_OK);
  CHECK(rows.str().rfind("# seed=42\nrho,rep,accuracy\n", 0) == 0);
  CHECK(summary.str().rfind("# seed=42\nrho,mean,min,max,stddev\n", 0) == 0);
  const double bad_grid[] = {0.5, 2.0};
  Owned r2, s2;
  CHECK(sa_sweep_csv(ds.p, bad_grid, 2, 1, 42, 1, &r2.p, &s2.p) == SA_ERR_INVALID_RHO);
}

TEST_CASE("eval and audit") {
  Dataset ds;
  REQUIRE(sa_dataset_parse(kArff, sizeof kArff - 1, SA_FORMAT_ARFF, &ds.p) == SA_OK);
  Owned report;
  REQUIRE(sa_eval_json(ds.p, "persistence", 42, 0, &report.p) == SA_OK);
  CHECK(report.str().find("\"learner\": \"persistence\"") != std::string::npos);
  CHECK(report.str().find("seed") == std::string::npos);
  CHECK(report.str().find("wall_time") == std::string::npos);
  Owned restart;
  REQUIRE(sa_eval_json(ds.p, "restart:0.5", 42, 0, &restart.p) == SA_OK);
  CHECK(restart.str().find("\"seed\": 42") != std::string::npos);
  Owned bad;
  CHECK(sa_eval_json(ds.p, "svm", 42, 0, &bad.p) == SA_ERR_INVALID_ARGUMENT);

  sa_verdict verdict{};
  Owned audit;
  REQUIRE(sa_audit_accuracy_json(ds.p, 0.9, &verdict, &audit.p) == SA_OK);
  CHECK(verdict == SA_ABOVE_PERSISTENCE);
  Owned low;
  REQUIRE(sa_audit_accuracy_json(ds.p, 0.1, &verdict, &low.p) == SA_OK);
  CHECK(verdict == SA_BELOW_MAJORITY);

  const std::string path = "c_api_log.csv";
  {
    std::ofstream log(path);
    log << "true,predicted\nDOWN,DOWN\nUP,DOWN\nUP,UP\nDOWN,UP\nDOWN,DOWN\nUP,DOWN\n";
  }
  Owned mismatch;
  CHECK(sa_audit_log_json(path.c_str(), ds.p, &verdict, &mismatch.p) == SA_ERR_LABEL_MISMATCH);
  CHECK(std::string(sa_last_error()).find("index 5") != std::string::npos);
  Owned free_log;
  CHECK(sa_audit_log_json(path.c_str(), nullptr, &verdict, &free_log.p) == SA_OK);
  CHECK(verdict == SA_BELOW_PERSISTENCE);
  std::remove(path.c_str());
}

} // TEST_SUITE
