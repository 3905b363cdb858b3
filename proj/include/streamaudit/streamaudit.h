/*
 * Copyright 2026 The streamaudit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libstreamaudit.
 *
 * Every call returns an sa_status. On failure, sa_last_error() gives a
 * message for the calling thread, valid until that thread's next call.
 * Strings handed out through `char **` are owned by the caller and released
 * with sa_string_free(). Datasets are opaque and released with
 * sa_dataset_free(). All label-only procedures predict class index 0 for
 * the first instance.
 */

#ifndef STREAMAUDIT_H
#define STREAMAUDIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STREAMAUDIT_BUILDING)
#    define SA_API __declspec(dllexport)
#  else
#    define SA_API __declspec(dllimport)
#  endif
#else
#  define SA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sa_status {
  SA_OK = 0,
  SA_ERR_INVALID_ARGUMENT = 1,
  SA_ERR_IO = 2,
  SA_ERR_PARSE = 3,
  SA_ERR_UNSUPPORTED_FEATURE = 4,
  SA_ERR_EMPTY_STREAM = 5,
  SA_ERR_ZERO_VARIANCE = 6,
  SA_ERR_NOT_BINARY = 7,
  SA_ERR_LAG_TOO_LARGE = 8,
  SA_ERR_INVALID_RHO = 9,
  SA_ERR_INVALID_MODEL = 10,
  SA_ERR_SCHEMA_MISMATCH = 11,
  SA_ERR_LABEL_MISMATCH = 12,
  SA_ERR_EMPTY_LOG = 13,
  SA_ERR_INTERNAL = 99
} sa_status;

typedef enum sa_format {
  SA_FORMAT_AUTO = 0, /* by extension; sniffed for "-" and buffers */
  SA_FORMAT_ARFF = 1,
  SA_FORMAT_CSV = 2   /* header row, class in the last column */
} sa_format;

typedef enum sa_verdict {
  SA_ABOVE_PERSISTENCE = 0,
  SA_BELOW_PERSISTENCE = 1,
  SA_BELOW_MAJORITY = 2
} sa_verdict;

typedef struct sa_dataset sa_dataset;

SA_API const char *sa_version(void);
SA_API const char *sa_status_name(sa_status status);
SA_API const char *sa_last_error(void);
SA_API void sa_string_free(char *s);

/* ---- datasets ---------------------------------------------------------- */

/* `path` of "-" reads standard input. */
SA_API sa_status sa_dataset_load(const char *path, sa_format format, sa_dataset **out);
SA_API sa_status sa_dataset_parse(const char *text, size_t length, sa_format format,
                                  sa_dataset **out);
/* Label-only dataset over classes {"0", "1", ...}; labels are class indices. */
SA_API sa_status sa_dataset_from_labels(const uint32_t *labels, size_t n,
                                        sa_dataset **out);
SA_API void sa_dataset_free(sa_dataset *ds);

SA_API sa_status sa_dataset_size(const sa_dataset *ds, size_t *n);
SA_API sa_status sa_dataset_num_classes(const sa_dataset *ds, size_t *k);
/* Copies the class index of every instance; `capacity` must be >= size. */
SA_API sa_status sa_dataset_labels(const sa_dataset *ds, uint32_t *out, size_t capacity);
/* The returned pointer lives as long as the dataset. */
SA_API sa_status sa_dataset_class_value(const sa_dataset *ds, size_t index,
                                        const char **out);
SA_API sa_status sa_dataset_to_arff(const sa_dataset *ds, char **out);
/* Single "label" column of class names, preceded by "# seed=S" when
 * `seed` is non-null. */
SA_API sa_status sa_dataset_to_label_csv(const sa_dataset *ds, const uint64_t *seed,
                                         char **out);

/* ---- diagnostics ------------------------------------------------------- */

SA_API sa_status sa_summary_json(const sa_dataset *ds, char **out);
SA_API sa_status sa_diagnose_json(const sa_dataset *ds, size_t max_lag, char **out);
SA_API sa_status sa_acf_csv(const sa_dataset *ds, size_t max_lag, unsigned threads,
                            char **out);
SA_API sa_status sa_persistence_accuracy(const sa_dataset *ds, double *out);
SA_API sa_status sa_independence_bar(const sa_dataset *ds, double *out);

/* ---- baselines --------------------------------------------------------- */

SA_API sa_status sa_majority_accuracy(const sa_dataset *ds, double *out);
SA_API sa_status sa_restart_accuracy(const sa_dataset *ds, double rho, uint64_t seed,
                                     double *out);
/* Writes up to `capacity` grid values; `*length` receives the full count,
 * so a first call with out == NULL sizes the buffer. */
SA_API sa_status sa_make_grid(double lo, double hi, double step, double *out,
                              size_t capacity, size_t *length);
SA_API sa_status sa_sweep_csv(const sa_dataset *ds, const double *grid, size_t grid_length,
                              size_t repetitions, uint64_t seed, unsigned threads,
                              char **rows_csv, char **summary_csv);

/* ---- synthetic streams ------------------------------------------------- */

SA_API sa_status sa_synth_markov(size_t n, double prior, double lag1, uint64_t seed,
                                 sa_dataset **out);
SA_API sa_status sa_synth_iid(size_t n, double prior, uint64_t seed, sa_dataset **out);

/* ---- evaluation and audit ---------------------------------------------- */

/* learner: "naive-bayes", "majority", "persistence" or "restart:RHO".
 * `seed` is recorded in the report; `timing` adds wall_time_seconds. */
SA_API sa_status sa_eval_json(const sa_dataset *ds, const char *learner, uint64_t seed,
                              int timing, char **out);
SA_API sa_status sa_audit_accuracy_json(const sa_dataset *ds, double subject,
                                        sa_verdict *verdict, char **out);
/* `ds` may be NULL; otherwise the log's true column must match its labels. */
SA_API sa_status sa_audit_log_json(const char *log_path, const sa_dataset *ds,
                                   sa_verdict *verdict, char **out);

#ifdef __cplusplus
}
#endif

#endif /* STREAMAUDIT_H */
