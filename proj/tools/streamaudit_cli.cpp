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

// streamaudit command-line front end. Talks to the library only through the
// C interface in streamaudit.h.
//
// Exit codes: 0 success, 1 usage error, 2 parse/data error, 3 failed
// --assert-above-bar.

#include "streamaudit/streamaudit.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitAssert = 3;
constexpr std::uint64_t kDefaultSeed = 42;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(sa_status status) {
  switch (status) {
  case SA_ERR_INVALID_ARGUMENT:
  case SA_ERR_INVALID_RHO:
  case SA_ERR_INVALID_MODEL:
    return kExitUsage;
  default:
    return kExitData;
  }
}

void check(sa_status status) {
  if (status != SA_OK)
    throw Failure{exit_code_for(status),
                  std::string(sa_status_name(status)) + ": " + sa_last_error()};
}

struct DatasetDeleter {
  void operator()(sa_dataset* ds) const { sa_dataset_free(ds); }
};
using Dataset = std::unique_ptr<sa_dataset, DatasetDeleter>;

struct StringDeleter {
  void operator()(char* s) const { sa_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

sa_format parse_format(const std::string& name) {
  if (name == "arff")
    return SA_FORMAT_ARFF;
  if (name == "csv")
    return SA_FORMAT_CSV;
  return SA_FORMAT_AUTO;
}

Dataset load(const std::string& path, const std::string& format) {
  sa_dataset* raw = nullptr;
  check(sa_dataset_load(path.c_str(), parse_format(format), &raw));
  return Dataset(raw);
}

void emit(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out)
    throw Failure{kExitData, "cannot write '" + path + "'"};
}

void emit_json(const std::string& path, const char* json) {
  emit(path, (std::string(json) + "\n").c_str());
}

std::uint64_t effective_seed(const std::optional<std::uint64_t>& seed) {
  if (seed)
    return *seed;
  std::cerr << "streamaudit: no --seed given, using default seed " << kDefaultSeed << '\n';
  return kDefaultSeed;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = spec.find(':', start);
    const auto token = spec.substr(start, colon == std::string::npos ? std::string::npos
                                                                     : colon - start);
    double value = 0.0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw Failure{kExitUsage, "--grid expects LO:HI:STEP, got '" + spec + "'"};
    parts.push_back(value);
    if (colon == std::string::npos)
      break;
    start = colon + 1;
  }
  if (parts.size() != 3)
    throw Failure{kExitUsage, "--grid expects LO:HI:STEP, got '" + spec + "'"};

  std::size_t length = 0;
  check(sa_make_grid(parts[0], parts[1], parts[2], nullptr, 0, &length));
  std::vector<double> grid(length);
  check(sa_make_grid(parts[0], parts[1], parts[2], grid.data(), grid.size(), &length));
  return grid;
}

unsigned default_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Label-autocorrelation diagnostics and naive-baseline audits for "
               "labeled data streams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sa_version()));

  std::string input;
  std::string format = "auto";
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input,-i", input, "Dataset file (ARFF or CSV), '-' for stdin")
        ->required();
    cmd->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "arff", "csv"}));
  };
  std::string out_path;
  unsigned threads = default_threads();
  std::optional<std::uint64_t> seed;

  // summary
  auto* summary = app.add_subcommand("summary", "Instance count, features and class counts");
  add_input(summary);

  // diagnose
  std::size_t max_lag = 96;
  auto* diag = app.add_subcommand("diagnose", "Priors, naive bars, run lengths and ACF as JSON");
  add_input(diag);
  diag->add_option("--max-lag", max_lag, "Largest ACF lag")->check(CLI::PositiveNumber);
  diag->add_option("--out,-o", out_path, "Output JSON (default stdout)");

  // acf
  auto* acf = app.add_subcommand("acf", "Label autocorrelation function as CSV");
  add_input(acf);
  acf->add_option("--max-lag", max_lag, "Largest lag")->required();
  acf->add_option("--out,-o", out_path, "Output CSV (default stdout)");
  acf->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  // sweep
  std::string grid_spec;
  std::size_t reps = 10;
  std::string summary_path;
  auto* sweep = app.add_subcommand("sweep", "Random-restart accuracy over a rho grid");
  add_input(sweep);
  sweep->add_option("--grid", grid_spec, "LO:HI:STEP, inclusive")->required();
  sweep->add_option("--reps", reps, "Repetitions per rho")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "Master seed (default 42)");
  sweep->add_option("--out,-o", out_path, "Per-run CSV rho,rep,accuracy (default stdout)");
  sweep->add_option("--summary", summary_path, "Summary CSV rho,mean,min,max,stddev");
  sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  // synth
  std::size_t n = 0;
  double prior = 0.5;
  double acf1 = 0.0;
  std::string synth_format = "csv";
  auto* synth = app.add_subcommand("synth", "Generate synthetic label streams");
  synth->require_subcommand(1);
  auto add_synth_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "Stream length")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--prior", prior, "Probability of class 1")->required();
    cmd->add_option("--seed", seed, "Generator seed (default 42)");
    cmd->add_option("--out,-o", out_path, "Output file (default stdout)");
    cmd->add_option("--format", synth_format, "Output format")
        ->check(CLI::IsMember({"csv", "arff"}));
  };
  auto* markov = synth->add_subcommand("markov", "Two-state Markov chain labels");
  add_synth_common(markov);
  markov->add_option("--acf1", acf1, "Lag-1 autocorrelation")->required();
  auto* iid = synth->add_subcommand("iid", "Independent Bernoulli labels");
  add_synth_common(iid);

  // eval
  std::string learner;
  bool timing = false;
  auto* eval = app.add_subcommand("eval", "Prequential test-then-train evaluation");
  add_input(eval);
  eval->add_option("--learner", learner, "naive-bayes | majority | persistence | restart:RHO")
      ->required();
  eval->add_option("--seed", seed, "Seed for restart learners (default 42)");
  eval->add_option("--out,-o", out_path, "Report JSON (default stdout)");
  eval->add_flag("--timing", timing, "Include wall time (output is then not reproducible)");

  // audit
  std::string predictions;
  std::optional<double> accuracy;
  bool assert_above = false;
  auto* audit = app.add_subcommand("audit", "Grade an accuracy against the persistence bar");
  audit->add_option("--input,-i", input, "Dataset file, '-' for stdin");
  audit->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"auto", "arff", "csv"}));
  auto* pred_opt = audit->add_option("--predictions", predictions,
                                     "Prediction log CSV with header true,predicted");
  auto* acc_opt = audit->add_option("--accuracy", accuracy, "Accuracy figure in [0, 1]");
  pred_opt->excludes(acc_opt);
  audit->add_flag("--assert-above-bar", assert_above,
                  "Exit 3 unless the verdict is AbovePersistence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "streamaudit: " << e.what() << '\n'
              << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (summary->parsed()) {
      auto ds = load(input, format);
      char* json = nullptr;
      check(sa_summary_json(ds.get(), &json));
      OwnedString owned(json);
      emit_json("", json);
    } else if (diag->parsed()) {
      auto ds = load(input, format);
      char* json = nullptr;
      check(sa_diagnose_json(ds.get(), max_lag, &json));
      OwnedString owned(json);
      emit_json(out_path, json);
    } else if (acf->parsed()) {
      auto ds = load(input, format);
      char* csv = nullptr;
      check(sa_acf_csv(ds.get(), max_lag, threads, &csv));
      OwnedString owned(csv);
      emit(out_path, csv);
    } else if (sweep->parsed()) {
      const auto grid = parse_grid(grid_spec);
      const auto s = effective_seed(seed);
      auto ds = load(input, format);
      char* rows = nullptr;
      char* sums = nullptr;
      check(sa_sweep_csv(ds.get(), grid.data(), grid.size(), reps, s, threads, &rows, &sums));
      OwnedString owned_rows(rows), owned_sums(sums);
      emit(out_path, rows);
      if (!summary_path.empty())
        emit(summary_path, sums);
    } else if (synth->parsed()) {
      const auto s = effective_seed(seed);
      sa_dataset* raw = nullptr;
      if (markov->parsed())
        check(sa_synth_markov(n, prior, acf1, s, &raw));
      else
        check(sa_synth_iid(n, prior, s, &raw));
      Dataset ds(raw);
      char* text = nullptr;
      if (synth_format == "arff") {
        check(sa_dataset_to_arff(ds.get(), &text));
        OwnedString owned(text);
        emit(out_path, ("% seed=" + std::to_string(s) + "\n" + text).c_str());
      } else {
        check(sa_dataset_to_label_csv(ds.get(), &s, &text));
        OwnedString owned(text);
        emit(out_path, text);
      }
    } else if (eval->parsed()) {
      const bool randomized = learner.rfind("restart:", 0) == 0;
      const auto s = randomized ? effective_seed(seed) : seed.value_or(kDefaultSeed);
      auto ds = load(input, format);
      char* json = nullptr;
      check(sa_eval_json(ds.get(), learner.c_str(), s, timing ? 1 : 0, &json));
      OwnedString owned(json);
      emit_json(out_path, json);
    } else if (audit->parsed()) {
      if (!accuracy && predictions.empty())
        throw Failure{kExitUsage, "audit needs --accuracy or --predictions"};
      if (accuracy && input.empty())
        throw Failure{kExitUsage, "audit --accuracy needs --input"};
      Dataset ds;
      if (!input.empty())
        ds = load(input, format);
      sa_verdict verdict = SA_BELOW_PERSISTENCE;
      char* json = nullptr;
      if (accuracy)
        check(sa_audit_accuracy_json(ds.get(), *accuracy, &verdict, &json));
      else
        check(sa_audit_log_json(predictions.c_str(), ds.get(), &verdict, &json));
      OwnedString owned(json);
      emit_json("", json);
      if (assert_above && verdict != SA_ABOVE_PERSISTENCE) {
        std::cerr << "streamaudit: accuracy does not exceed the persistence bar\n";
        return kExitAssert;
      }
    }
  } catch (const Failure& f) {
    std::cerr << "streamaudit: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "streamaudit: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}
