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

#include "streamaudit/baselines.hpp"
#include "streamaudit/diagnostics.hpp"
#include "streamaudit/error.hpp"
#include "streamaudit/eval.hpp"
#include "streamaudit/serialize.hpp"
#include "streamaudit/stream_io.hpp"
#include "streamaudit/synth.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct sa_dataset {
  streamaudit::StreamDataset data;
};

namespace {

using namespace streamaudit;

thread_local std::string last_error;

sa_status to_status(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidArgument: return SA_ERR_INVALID_ARGUMENT;
  case ErrorCode::Io: return SA_ERR_IO;
  case ErrorCode::Parse: return SA_ERR_PARSE;
  case ErrorCode::UnsupportedFeature: return SA_ERR_UNSUPPORTED_FEATURE;
  case ErrorCode::EmptyStream: return SA_ERR_EMPTY_STREAM;
  case ErrorCode::ZeroVariance: return SA_ERR_ZERO_VARIANCE;
  case ErrorCode::NotBinary: return SA_ERR_NOT_BINARY;
  case ErrorCode::LagTooLarge: return SA_ERR_LAG_TOO_LARGE;
  case ErrorCode::InvalidRho: return SA_ERR_INVALID_RHO;
  case ErrorCode::InvalidModel: return SA_ERR_INVALID_MODEL;
  case ErrorCode::SchemaMismatch: return SA_ERR_SCHEMA_MISMATCH;
  case ErrorCode::LabelMismatch: return SA_ERR_LABEL_MISMATCH;
  case ErrorCode::EmptyLog: return SA_ERR_EMPTY_LOG;
  }
  return SA_ERR_INTERNAL;
}

template <class F>
sa_status guarded(F&& body, const std::string& context = {}) noexcept {
  try {
    last_error.clear();
    body();
    return SA_OK;
  } catch (const Error& e) {
    last_error = context.empty() ? std::string(e.what()) : context + ": " + e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return SA_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p)
    throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p)
    fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

DatasetFormat to_format(sa_format format) {
  switch (format) {
  case SA_FORMAT_ARFF: return DatasetFormat::Arff;
  case SA_FORMAT_CSV: return DatasetFormat::Csv;
  default: return DatasetFormat::Auto;
  }
}

sa_verdict to_c(Verdict v) {
  switch (v) {
  case Verdict::AbovePersistence: return SA_ABOVE_PERSISTENCE;
  case Verdict::BelowPersistence: return SA_BELOW_PERSISTENCE;
  case Verdict::BelowMajority: return SA_BELOW_MAJORITY;
  }
  return SA_BELOW_PERSISTENCE;
}

sa_dataset* wrap(StreamDataset ds) {
  return new sa_dataset{std::move(ds)};
}

} // namespace

extern "C" {

const char* sa_version(void) { return "0.1.0"; }

const char* sa_status_name(sa_status status) {
  switch (status) {
  case SA_OK: return "OK";
  case SA_ERR_INVALID_ARGUMENT: return "InvalidArgument";
  case SA_ERR_IO: return "Io";
  case SA_ERR_PARSE: return "ParseError";
  case SA_ERR_UNSUPPORTED_FEATURE: return "UnsupportedFeature";
  case SA_ERR_EMPTY_STREAM: return "EmptyStream";
  case SA_ERR_ZERO_VARIANCE: return "ZeroVariance";
  case SA_ERR_NOT_BINARY: return "NotBinary";
  case SA_ERR_LAG_TOO_LARGE: return "LagTooLarge";
  case SA_ERR_INVALID_RHO: return "InvalidRho";
  case SA_ERR_INVALID_MODEL: return "InvalidModel";
  case SA_ERR_SCHEMA_MISMATCH: return "SchemaMismatch";
  case SA_ERR_LABEL_MISMATCH: return "LabelMismatch";
  case SA_ERR_EMPTY_LOG: return "EmptyLog";
  case SA_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* sa_last_error(void) { return last_error.c_str(); }

void sa_string_free(char* s) { std::free(s); }

sa_status sa_dataset_load(const char* path, sa_format format, sa_dataset** out) {
  return guarded(
      [&] {
        require(path, "path");
        require(out, "out");
        *out = wrap(load_dataset(path, to_format(format)));
      },
      path ? std::string(path) : std::string{});
}

sa_status sa_dataset_parse(const char* text, size_t length, sa_format format,
                           sa_dataset** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in(std::string(text, length));
    bool csv = format == SA_FORMAT_CSV;
    if (format == SA_FORMAT_AUTO) {
      std::string line;
      std::istringstream probe(std::string(text, length));
      while (std::getline(probe, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%' || line[first] == '#')
          continue;
        csv = line[first] != '@';
        break;
      }
    }
    *out = wrap(csv ? parse_csv(in) : parse_arff(in));
  });
}

sa_status sa_dataset_from_labels(const uint32_t* labels, size_t n, sa_dataset** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0)
      require(labels, "labels");
    std::vector<Label> ls;
    ls.reserve(n);
    std::uint32_t top = 1;
    for (size_t i = 0; i < n; ++i) {
      ls.push_back(static_cast<Label>(labels[i]));
      top = std::max(top, labels[i]);
    }
    auto ds = labels_to_dataset(ls);
    auto& values = ds.schema.attributes[ds.schema.class_index].values;
    for (std::uint32_t c = 2; c <= top; ++c)
      values.push_back(std::to_string(c));
    *out = wrap(std::move(ds));
  });
}

void sa_dataset_free(sa_dataset* ds) { delete ds; }

sa_status sa_dataset_size(const sa_dataset* ds, size_t* n) {
  return guarded([&] {
    require(ds, "dataset");
    require(n, "n");
    *n = ds->data.size();
  });
}

sa_status sa_dataset_num_classes(const sa_dataset* ds, size_t* k) {
  return guarded([&] {
    require(ds, "dataset");
    require(k, "k");
    *k = ds->data.num_classes();
  });
}

sa_status sa_dataset_labels(const sa_dataset* ds, uint32_t* out, size_t capacity) {
  return guarded([&] {
    require(ds, "dataset");
    if (capacity < ds->data.size())
      fail(ErrorCode::InvalidArgument, "label buffer too small");
    if (ds->data.size() > 0)
      require(out, "out");
    for (size_t i = 0; i < ds->data.size(); ++i)
      out[i] = static_cast<uint32_t>(ds->data.instances[i].label);
  });
}

sa_status sa_dataset_class_value(const sa_dataset* ds, size_t index, const char** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    const auto& values = ds->data.class_values();
    if (index >= values.size())
      fail(ErrorCode::InvalidArgument, "class index out of range");
    *out = values[index].c_str();
  });
}

sa_status sa_dataset_to_arff(const sa_dataset* ds, char** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    std::ostringstream s;
    write_arff(s, ds->data);
    *out = copy_out(s.str());
  });
}

sa_status sa_dataset_to_label_csv(const sa_dataset* ds, const uint64_t* seed, char** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    std::ostringstream s;
    if (seed)
      s << "# seed=" << *seed << '\n';
    s << "label\n";
    const auto& values = ds->data.class_values();
    for (const auto& inst : ds->data.instances)
      s << values[index_of(inst.label)] << '\n';
    *out = copy_out(s.str());
  });
}

sa_status sa_summary_json(const sa_dataset* ds, char** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = copy_out(summary_json(dataset_summary(ds->data)));
  });
}

sa_status sa_diagnose_json(const sa_dataset* ds, size_t max_lag, char** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = copy_out(diagnostics_json(diagnose(ds->data, max_lag)));
  });
}

sa_status sa_acf_csv(const sa_dataset* ds, size_t max_lag, unsigned threads, char** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    std::ostringstream s;
    write_acf_csv(s, autocorrelation(ds->data.labels(), max_lag, threads));
    *out = copy_out(s.str());
  });
}

sa_status sa_persistence_accuracy(const sa_dataset* ds, double* out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = persistence_accuracy(ds->data.labels());
  });
}

sa_status sa_independence_bar(const sa_dataset* ds, double* out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = independence_bar(label_distribution(ds->data.labels(), ds->data.num_classes()));
  });
}

sa_status sa_majority_accuracy(const sa_dataset* ds, double* out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = majority_baseline(ds->data.labels());
  });
}

sa_status sa_restart_accuracy(const sa_dataset* ds, double rho, uint64_t seed, double* out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = random_restart_run(ds->data.labels(), {rho, seed});
  });
}

sa_status sa_make_grid(double lo, double hi, double step, double* out, size_t capacity,
                       size_t* length) {
  return guarded([&] {
    require(length, "length");
    const auto grid = make_grid(lo, hi, step);
    *length = grid.size();
    if (out)
      std::copy_n(grid.begin(), std::min(capacity, grid.size()), out);
  });
}

sa_status sa_sweep_csv(const sa_dataset* ds, const double* grid, size_t grid_length,
                       size_t repetitions, uint64_t seed, unsigned threads,
                       char** rows_csv, char** summary_csv) {
  return guarded([&] {
    require(ds, "dataset");
    require(grid, "grid");
    SweepConfig config{std::vector<double>(grid, grid + grid_length), repetitions, seed};
    const auto result = rho_sweep(ds->data.labels(), config, {}, threads);
    if (rows_csv) {
      std::ostringstream s;
      write_sweep_csv(s, result);
      *rows_csv = copy_out(s.str());
    }
    if (summary_csv) {
      std::ostringstream s;
      write_sweep_summary_csv(s, result);
      try {
        *summary_csv = copy_out(s.str());
      } catch (...) {
        if (rows_csv)
          sa_string_free(*rows_csv);
        throw;
      }
    }
  });
}

sa_status sa_synth_markov(size_t n, double prior, double lag1, uint64_t seed,
                          sa_dataset** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(labels_to_dataset(gen_markov_labels(MarkovLabelModel(prior, lag1, n, seed))));
  });
}

sa_status sa_synth_iid(size_t n, double prior, uint64_t seed, sa_dataset** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(labels_to_dataset(gen_iid_labels(prior, n, seed)));
  });
}

sa_status sa_eval_json(const sa_dataset* ds, const char* learner, uint64_t seed, int timing,
                       char** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(learner, "learner");
    require(out, "out");
    auto clf = make_classifier(learner, ds->data.schema, seed, label_at(0));
    const auto report = prequential_eval(*clf, ds->data);
    const bool randomized = std::string_view(learner).starts_with("restart:");
    *out = copy_out(eval_report_json(report, timing != 0,
                                     randomized ? std::optional<std::uint64_t>(seed)
                                                : std::nullopt));
  });
}

sa_status sa_audit_accuracy_json(const sa_dataset* ds, double subject, sa_verdict* verdict,
                                 char** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(out, "out");
    const auto v = audit_accuracy(subject, ds->data);
    if (verdict)
      *verdict = to_c(v.verdict);
    *out = copy_out(audit_json(v, ds->data.size()));
  });
}

sa_status sa_audit_log_json(const char* log_path, const sa_dataset* ds, sa_verdict* verdict,
                            char** out) {
  return guarded(
      [&] {
        require(log_path, "log path");
        require(out, "out");
        std::ifstream file(log_path);
        if (!file)
          fail(ErrorCode::Io, "cannot open prediction log");
        const auto log = parse_prediction_log(file);
        const auto result = ds ? audit_prediction_log(log, ds->data) : audit_prediction_log(log);
        if (verdict)
          *verdict = to_c(result.verdict.verdict);
        *out = copy_out(audit_json(result.verdict, result.report.n, &result.report));
      },
      log_path ? std::string(log_path) : std::string{});
}

} // extern "C"
