// Copyright 2026 The arbest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARBEST_ARBEST_H_
#define ARBEST_ARBEST_H_

#include <stddef.h>
#include <stdint.h>

/* C interface of the arbest shared library.
 *
 * Handles are opaque and owned by the caller; free each with its matching
 * *_free function. A graph must outlive every handle created from it.
 * Functions returning arbest_status report failures through the code plus
 * a thread-local message from arbest_last_error(). Vertex ids are 0-based.
 */

#if defined(_WIN32)
#define ARBEST_API __declspec(dllexport)
#else
#define ARBEST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arbest_status {
  ARBEST_OK = 0,
  ARBEST_ERR_INVALID_ARGUMENT = 1,
  ARBEST_ERR_PARSE = 2,
  ARBEST_ERR_IO = 3,
  ARBEST_ERR_SIZE_LIMIT = 4,
  ARBEST_ERR_NOT_PEELABLE = 5,
  ARBEST_ERR_GENERATION = 6,
  ARBEST_ERR_BUDGET_EXHAUSTED = 7,
  ARBEST_ERR_INTERNAL = 99
} arbest_status;

ARBEST_API const char* arbest_version(void);
ARBEST_API const char* arbest_status_name(arbest_status status);
/* Message of the last failed call on this thread, "" after a success. */
ARBEST_API const char* arbest_last_error(void);
/* 1-based input line of the last ARBEST_ERR_PARSE, 0 otherwise. */
ARBEST_API size_t arbest_last_error_line(void);

/* Owned text buffer. */
typedef struct arbest_text arbest_text;
ARBEST_API const char* arbest_text_data(const arbest_text* text);
ARBEST_API size_t arbest_text_size(const arbest_text* text);
ARBEST_API void arbest_text_free(arbest_text* text);

/* ---- graphs ---- */

typedef struct arbest_graph arbest_graph;

ARBEST_API arbest_status arbest_graph_load_file(const char* path, arbest_graph** out);
ARBEST_API arbest_status arbest_graph_load_text(const char* text, size_t size,
                                                arbest_graph** out);
/* `endpoints` holds 2*m ids: u0 v0 u1 v1 ... */
ARBEST_API arbest_status arbest_graph_from_edges(uint32_t n, const uint32_t* endpoints,
                                                 uint64_t m, arbest_graph** out);
/* `comment` may be NULL; otherwise written as a leading "# " line. */
ARBEST_API arbest_status arbest_graph_save_file(const arbest_graph* g, const char* path,
                                                const char* comment);
ARBEST_API arbest_status arbest_graph_to_text(const arbest_graph* g, const char* comment,
                                              arbest_text** out);
ARBEST_API void arbest_graph_free(arbest_graph* g);
ARBEST_API uint32_t arbest_graph_num_vertices(const arbest_graph* g);
ARBEST_API uint64_t arbest_graph_num_edges(const arbest_graph* g);

/* ---- generators ---- */

typedef struct arbest_gen_spec {
  const char* family; /* planted-core | layered | uniform | forest | clique-union */
  uint32_t n;
  uint32_t lambda;
  uint32_t d_mult;
  uint32_t fan;
  uint64_t m;
  uint64_t seed;
} arbest_gen_spec;

ARBEST_API void arbest_gen_spec_init(arbest_gen_spec* spec);
/* Generates and checks the family's structural property. */
ARBEST_API arbest_status arbest_generate(const arbest_gen_spec* spec, arbest_graph** out);
/* "family=... seed=..." header comment. */
ARBEST_API arbest_status arbest_gen_describe(const arbest_gen_spec* spec, arbest_text** out);
/* Exact arboricity when known (lower == upper), else degeneracy bounds. */
ARBEST_API arbest_status arbest_lambda_truth(const arbest_gen_spec* spec, const arbest_graph* g,
                                             uint32_t* lower, uint32_t* upper);

/* ---- query oracle ---- */

typedef struct arbest_oracle arbest_oracle;

typedef struct arbest_query_counts {
  uint64_t neighbor_queries;
  uint64_t degree_queries;
  uint64_t scheduler_steps;
  int exhausted;
} arbest_query_counts;

/* step_budget < 0 means unlimited. */
ARBEST_API arbest_status arbest_oracle_create(const arbest_graph* g, int64_t step_budget,
                                              arbest_oracle** out);
ARBEST_API void arbest_oracle_free(arbest_oracle* oracle);
/* i is 1-based; *found is 0 when deg(v) < i. */
ARBEST_API arbest_status arbest_oracle_neighbor(arbest_oracle* oracle, uint32_t v, uint64_t i,
                                                uint32_t* neighbor, int* found);
ARBEST_API arbest_status arbest_oracle_degree(arbest_oracle* oracle, uint32_t v, uint32_t* out);
ARBEST_API arbest_status arbest_oracle_degree_by_search(arbest_oracle* oracle, uint32_t v,
                                                        uint32_t* out);
ARBEST_API arbest_status arbest_oracle_charge_step(arbest_oracle* oracle);
ARBEST_API void arbest_oracle_counts(const arbest_oracle* oracle, arbest_query_counts* out);

/* ---- exact baselines ---- */

/* `order` may be NULL, else receives n vertex ids. */
ARBEST_API arbest_status arbest_degeneracy(const arbest_graph* g, uint32_t* degeneracy,
                                           uint32_t* order);

typedef struct arbest_peel arbest_peel;
/* Largest-id tie-break when `largest_id_first` is nonzero. */
ARBEST_API arbest_status arbest_threshold_peel(const arbest_graph* g, double lambda,
                                               int largest_id_first, arbest_peel** out);
ARBEST_API uint32_t arbest_peel_threshold(const arbest_peel* p);
ARBEST_API size_t arbest_peel_removed_count(const arbest_peel* p);
ARBEST_API const uint32_t* arbest_peel_order(const arbest_peel* p);
ARBEST_API const uint32_t* arbest_peel_removal_degrees(const arbest_peel* p);
ARBEST_API size_t arbest_peel_core_size(const arbest_peel* p);
ARBEST_API const uint32_t* arbest_peel_core(const arbest_peel* p);
ARBEST_API void arbest_peel_free(arbest_peel* p);

ARBEST_API arbest_status arbest_brute_force_arboricity(const arbest_graph* g, uint32_t* out);
ARBEST_API arbest_status arbest_brute_force_density(const arbest_graph* g, uint64_t* num,
                                                    uint64_t* den);

typedef struct arbest_tvector arbest_tvector;
ARBEST_API arbest_status arbest_t_recursion(const arbest_graph* g, double lambda, double c,
                                            arbest_tvector** out);
ARBEST_API size_t arbest_tvector_size(const arbest_tvector* t);
ARBEST_API const uint32_t* arbest_tvector_order(const arbest_tvector* t);
ARBEST_API const double* arbest_tvector_values(const arbest_tvector* t);
ARBEST_API double arbest_tvector_total(const arbest_tvector* t);
ARBEST_API void arbest_tvector_free(arbest_tvector* t);

/* ---- comparators and estimation ---- */

typedef enum arbest_algo { ARBEST_ALGO_FORTIFIED = 0, ARBEST_ALGO_WARMUP = 1 } arbest_algo;
typedef enum arbest_schedule {
  ARBEST_SCHEDULE_STAGGERED = 0,
  ARBEST_SCHEDULE_NAIVE = 1
} arbest_schedule;

typedef struct arbest_options {
  arbest_algo algo;
  arbest_schedule schedule;
  uint32_t num_tests;     /* odd; 0 selects 2 ceil(log2 n) + 1 */
  double budget_beta;     /* <= 0 selects 1000 (fortified) or 50 (warm-up) */
  int unlimited_budget;   /* nonzero disables the step budget */
  int early_stop;         /* nonzero ends the vote once the majority is decided */
  uint32_t lanes;         /* warm-up lane count; 0 selects 3 ceil(log2 n) */
  double sample_constant; /* warm-up root sampling constant c_s */
  uint64_t seed;
} arbest_options;

ARBEST_API void arbest_options_init(arbest_options* opts);

typedef struct arbest_test_result {
  int yes;
  uint64_t roots;
  uint64_t roots_finished;
  uint64_t steps;
  uint64_t neighbor_queries;
  uint64_t degree_queries;
  uint64_t budget; /* valid when has_budget */
  int has_budget;
} arbest_test_result;

ARBEST_API arbest_status arbest_run_test(const arbest_graph* g, double lambda,
                                         const arbest_options* opts, arbest_test_result* out);

typedef struct arbest_compare_result {
  int yes;
  uint32_t yes_votes;
  uint32_t no_votes;
  uint32_t tests_run;
  uint64_t steps;
  uint64_t neighbor_queries;
  uint64_t degree_queries;
} arbest_compare_result;

ARBEST_API arbest_status arbest_compare(const arbest_graph* g, double lambda,
                                        const arbest_options* opts, arbest_compare_result* out);

typedef struct arbest_threshold_record {
  double lambda;
  int yes;
  uint32_t yes_votes;
  uint32_t no_votes;
  uint64_t neighbor_queries;
  uint64_t degree_queries;
  uint64_t steps;
} arbest_threshold_record;

typedef struct arbest_estimate arbest_estimate;
ARBEST_API arbest_status arbest_estimate_run(const arbest_graph* g, const arbest_options* opts,
                                             arbest_estimate** out);
ARBEST_API double arbest_estimate_lambda_hat(const arbest_estimate* e);
ARBEST_API size_t arbest_estimate_threshold_count(const arbest_estimate* e);
ARBEST_API arbest_status arbest_estimate_threshold(const arbest_estimate* e, size_t i,
                                                   arbest_threshold_record* out);
ARBEST_API double arbest_estimate_wall_ms(const arbest_estimate* e);
ARBEST_API uint64_t arbest_estimate_seed(const arbest_estimate* e);
ARBEST_API void arbest_estimate_free(arbest_estimate* e);

typedef struct arbest_calibration {
  double lambda;
  double c;
  double s;             /* sum of the T recursion along the peel order */
  double beta_from_s;   /* 10 S / n */
  double beta_observed; /* largest unlimited-budget test cost * lambda / n */
  double mean_steps;
  uint64_t max_steps;
  uint32_t runs;
} arbest_calibration;

/* Fortified comparator budget calibration on a graph that peels at lambda. */
ARBEST_API arbest_status arbest_calibrate(const arbest_graph* g, double lambda, double c,
                                          uint32_t runs, uint64_t seed,
                                          arbest_calibration* out);

/* ---- benchmark ---- */

/* timing: <0 uses the config's "timing" field, 0 off, >0 on. Output is CSV,
 * or a JSON array of rows when as_json is nonzero. */
ARBEST_API arbest_status arbest_bench_run(const char* config_json, int timing, int as_json,
                                          arbest_text** out);

#ifdef __cplusplus
}
#endif

#endif /* ARBEST_ARBEST_H_ */
