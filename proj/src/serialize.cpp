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
#include "text_util.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace streamaudit {

using json = nlohmann::ordered_json;

namespace {

json confusion_json(const EvalReport& report) {
  return json{{"classes", report.class_values}, {"counts", report.confusion}};
}

} // namespace

std::string format_rho(double rho) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", rho);
  return buf;
}

std::string summary_json(const DatasetSummary& summary) {
  json j;
  j["n_instances"] = summary.n_instances;
  j["n_features"] = summary.n_features;
  j["class_values"] = summary.class_values;
  j["class_counts"] = summary.class_counts;
  return j.dump(2);
}

std::string diagnostics_json(const DiagnosticsReport& report) {
  json priors = json::object();
  for (std::size_t c = 0; c < report.class_values.size(); ++c)
    priors[report.class_values[c]] = report.distribution.frequencies.at(c);

  json j;
  j["n"] = report.distribution.n;
  j["class_priors"] = priors;
  j["independence_bar"] = report.independence_bar;
  j["persistence_bar"] = report.persistence_bar;
  j["run_lengths"] = {{"count", report.run_lengths.overall.count},
                      {"mean", report.run_lengths.overall.mean},
                      {"max", report.run_lengths.overall.max}};
  if (report.acf) {
    j["acf"] = report.acf->values;
  } else {
    j["acf"] = nullptr;
    j["acf_error"] = report.acf_error;
  }
  return j.dump(2);
}

void write_acf_csv(std::ostream& out, const AcfSeries& acf) {
  out << "lag,acf\n";
  for (std::size_t i = 0; i < acf.values.size(); ++i)
    out << acf.lags[i] << ',' << detail::format_real(acf.values[i]) << '\n';
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "# seed=" << result.master_seed << '\n';
  out << "rho,rep,accuracy\n";
  for (const auto& row : result.rows)
    out << format_rho(row.rho) << ',' << row.repetition << ','
        << detail::format_real(row.accuracy) << '\n';
}

void write_sweep_summary_csv(std::ostream& out, const SweepResult& result) {
  out << "# seed=" << result.master_seed << '\n';
  out << "rho,mean,min,max,stddev\n";
  for (const auto& s : result.summary)
    out << format_rho(s.rho) << ',' << detail::format_real(s.mean) << ','
        << detail::format_real(s.min) << ',' << detail::format_real(s.max) << ','
        << detail::format_real(s.stddev) << '\n';
}

std::string eval_report_json(const EvalReport& report, bool timing,
                             std::optional<std::uint64_t> seed) {
  json j;
  j["learner"] = report.classifier;
  if (seed)
    j["seed"] = *seed;
  j["n"] = report.n;
  j["correct"] = report.correct;
  j["accuracy"] = report.accuracy;
  j["confusion"] = confusion_json(report);
  if (timing)
    j["wall_time_seconds"] = report.wall_time_seconds;
  return j.dump(2);
}

std::string audit_json(const AuditVerdict& verdict, std::size_t n, const EvalReport* report) {
  json j;
  j["n"] = n;
  j["accuracy"] = verdict.subject;
  j["confusion"] = report ? confusion_json(*report) : json(nullptr);
  j["bars"] = {{"majority", verdict.majority_bar},
               {"independence", verdict.independence_bar},
               {"persistence", verdict.persistence_bar}};
  j["margin"] = verdict.margin;
  j["verdict"] = std::string(to_string(verdict.verdict));
  return j.dump(2);
}

} // namespace streamaudit
