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

// Machine-readable renderings of the reports. Field names and column headers
// are part of the external interface; keep them stable.

#ifndef STREAMAUDIT_SERIALIZE_HPP
#define STREAMAUDIT_SERIALIZE_HPP

#include "streamaudit/baselines.hpp"
#include "streamaudit/diagnostics.hpp"
#include "streamaudit/eval.hpp"
#include "streamaudit/stream_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace streamaudit {

/// {n_instances, n_features, class_values, class_counts}
std::string summary_json(const DatasetSummary& summary);

/// {n, class_priors, independence_bar, persistence_bar,
///  run_lengths: {count, mean, max}, acf}. acf is an array of r(1..K), or
/// null with an extra "acf_error" field when it was omitted.
std::string diagnostics_json(const DiagnosticsReport& report);

/// "lag,acf" header, one row per lag.
void write_acf_csv(std::ostream& out, const AcfSeries& acf);

/// "# seed=S" then "rho,rep,accuracy".
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// "# seed=S" then "rho,mean,min,max,stddev".
void write_sweep_summary_csv(std::ostream& out, const SweepResult& result);

/// {learner, n, correct, accuracy, confusion: {classes, counts}} plus "seed"
/// when given and "wall_time_seconds" when `timing` is set.
std::string eval_report_json(const EvalReport& report, bool timing,
                             std::optional<std::uint64_t> seed = std::nullopt);

/// {n, accuracy, confusion, bars: {majority, independence, persistence},
///  margin, verdict}. confusion is null when only an accuracy was audited.
std::string audit_json(const AuditVerdict& verdict, std::size_t n,
                       const EvalReport* report = nullptr);

/// Grid values print with 10 significant digits so 0.1 * 3 reads "0.3".
std::string format_rho(double rho);

} // namespace streamaudit

#endif // STREAMAUDIT_SERIALIZE_HPP
