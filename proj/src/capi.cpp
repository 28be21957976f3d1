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

#include "arbest/arbest.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arbest/baselines.hpp"
#include "arbest/bench.hpp"
#include "arbest/errors.hpp"
#include "arbest/fortified.hpp"
#include "arbest/generators.hpp"
#include "arbest/graph.hpp"
#include "arbest/warmup.hpp"

struct arbest_text {
  std::string data;
};

struct arbest_graph {
  arbest::StaticGraph graph;
};

struct arbest_oracle {
  arbest_oracle(const arbest::StaticGraph& g, std::optional<std::uint64_t> budget)
      : counter(budget), oracle(g, counter) {}
  arbest::QueryCounter counter;
  arbest::GraphOracle oracle;
};

struct arbest_peel {
  arbest::PeelSequence seq;
};

struct arbest_tvector {
  arbest::TVector t;
};

struct arbest_estimate {
  arbest::EstimateReport report;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_line = 0;

arbest_status fail(arbest_status code, const char* what, std::size_t line = 0) {
  g_last_error = what;
  g_last_line = line;
  return code;
}

// Runs `body`, mapping core exceptions to status codes.
template <class F>
arbest_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    g_last_line = 0;
    return ARBEST_OK;
  } catch (const arbest::ParseError& e) {
    return fail(ARBEST_ERR_PARSE, e.what(), e.line());
  } catch (const arbest::IoError& e) {
    return fail(ARBEST_ERR_IO, e.what());
  } catch (const arbest::SizeLimitError& e) {
    return fail(ARBEST_ERR_SIZE_LIMIT, e.what());
  } catch (const arbest::NotPeelableError& e) {
    return fail(ARBEST_ERR_NOT_PEELABLE, e.what());
  } catch (const arbest::GenerationError& e) {
    return fail(ARBEST_ERR_GENERATION, e.what());
  } catch (const arbest::BudgetExhausted& e) {
    return fail(ARBEST_ERR_BUDGET_EXHAUSTED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ARBEST_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ARBEST_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ARBEST_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ARBEST_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

arbest::GenSpec to_spec(const arbest_gen_spec* s) {
  require(s != nullptr, "null generator spec");
  require(s->family != nullptr, "generator spec without family");
  arbest::GenSpec spec;
  spec.family = arbest::parse_family(s->family);
  spec.n = s->n;
  spec.lambda = s->lambda;
  spec.d_mult = s->d_mult;
  spec.fan = s->fan;
  spec.m = s->m;
  spec.seed = s->seed;
  return spec;
}

arbest::Pacing to_pacing(arbest_schedule s) {
  return s == ARBEST_SCHEDULE_NAIVE ? arbest::Pacing::naive : arbest::Pacing::staggered;
}

arbest::ComparatorConfig fortified_config(const arbest_options& o) {
  arbest::ComparatorConfig c;
  c.num_tests = o.num_tests;
  if (o.budget_beta > 0) c.budget_beta = o.budget_beta;
  c.unlimited_budget = o.unlimited_budget != 0;
  c.pacing = to_pacing(o.schedule);
  c.early_stop = o.early_stop != 0;
  return c;
}

arbest::WarmupConfig warmup_config(const arbest_options& o) {
  arbest::WarmupConfig c;
  c.num_tests = o.num_tests;
  if (o.budget_beta > 0) c.budget_beta = o.budget_beta;
  c.unlimited_budget = o.unlimited_budget != 0;
  c.pacing = to_pacing(o.schedule);
  c.early_stop = o.early_stop != 0;
  c.lanes = o.lanes;
  if (o.sample_constant > 0) c.sample_constant = o.sample_constant;
  return c;
}

const arbest_options& options_or_default(const arbest_options* opts, arbest_options& storage) {
  if (opts) return *opts;
  arbest_options_init(&storage);
  return storage;
}

void check_lambda(double lambda) { require(lambda >= 1.0, "lambda must be >= 1"); }

}  // namespace

extern "C" {

const char* arbest_version(void) { return "1.0.0"; }

const char* arbest_status_name(arbest_status status) {
  switch (status) {
    case ARBEST_OK: return "ok";
    case ARBEST_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ARBEST_ERR_PARSE: return "parse error";
    case ARBEST_ERR_IO: return "i/o error";
    case ARBEST_ERR_SIZE_LIMIT: return "size limit";
    case ARBEST_ERR_NOT_PEELABLE: return "not peelable";
    case ARBEST_ERR_GENERATION: return "generation error";
    case ARBEST_ERR_BUDGET_EXHAUSTED: return "budget exhausted";
    case ARBEST_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* arbest_last_error(void) { return g_last_error.c_str(); }
size_t arbest_last_error_line(void) { return g_last_line; }

const char* arbest_text_data(const arbest_text* text) { return text ? text->data.c_str() : ""; }
size_t arbest_text_size(const arbest_text* text) { return text ? text->data.size() : 0; }
void arbest_text_free(arbest_text* text) { delete text; }

arbest_status arbest_graph_load_file(const char* path, arbest_graph** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new arbest_graph{arbest::load_edge_list_file(path)};
  });
}

arbest_status arbest_graph_load_text(const char* text, size_t size, arbest_graph** out) {
  return guarded([&] {
    require((text || size == 0) && out, "null argument");
    *out = new arbest_graph{arbest::load_edge_list(std::string_view(text ? text : "", size))};
  });
}

arbest_status arbest_graph_from_edges(uint32_t n, const uint32_t* endpoints, uint64_t m,
                                      arbest_graph** out) {
  return guarded([&] {
    require((endpoints || m == 0) && out, "null argument");
    std::vector<arbest::Edge> edges(m);
    for (uint64_t i = 0; i < m; ++i) edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
    *out = new arbest_graph{arbest::StaticGraph::from_edges(n, edges)};
  });
}

arbest_status arbest_graph_save_file(const arbest_graph* g, const char* path,
                                     const char* comment) {
  return guarded([&] {
    require(g && path, "null argument");
    arbest::write_edge_list_file(path, g->graph, comment ? comment : "");
  });
}

arbest_status arbest_graph_to_text(const arbest_graph* g, const char* comment,
                                   arbest_text** out) {
  return guarded([&] {
    require(g && out, "null argument");
    std::ostringstream s;
    arbest::write_edge_list(s, g->graph, comment ? comment : "");
    *out = new arbest_text{s.str()};
  });
}

void arbest_graph_free(arbest_graph* g) { delete g; }
uint32_t arbest_graph_num_vertices(const arbest_graph* g) {
  return g ? g->graph.num_vertices() : 0;
}
uint64_t arbest_graph_num_edges(const arbest_graph* g) { return g ? g->graph.num_edges() : 0; }

void arbest_gen_spec_init(arbest_gen_spec* spec) {
  if (!spec) return;
  spec->family = "forest";
  spec->n = 0;
  spec->lambda = 1;
  spec->d_mult = 120;
  spec->fan = 4;
  spec->m = 0;
  spec->seed = 1;
}

arbest_status arbest_generate(const arbest_gen_spec* spec, arbest_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const arbest::GenSpec s = to_spec(spec);
    arbest::StaticGraph g = arbest::generate(s);
    const std::string problem = arbest::check_structure(s, g);
    if (!problem.empty()) throw arbest::GenerationError("post-check failed: " + problem);
    *out = new arbest_graph{std::move(g)};
  });
}

arbest_status arbest_gen_describe(const arbest_gen_spec* spec, arbest_text** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new arbest_text{arbest::describe(to_spec(spec))};
  });
}

arbest_status arbest_lambda_truth(const arbest_gen_spec* spec, const arbest_graph* g,
                                  uint32_t* lower, uint32_t* upper) {
  return guarded([&] {
    require(g && lower && upper, "null argument");
    const arbest::LambdaTruth t = arbest::lambda_truth(to_spec(spec), g->graph);
    *lower = t.lower;
    *upper = t.upper;
  });
}

arbest_status arbest_oracle_create(const arbest_graph* g, int64_t step_budget,
                                   arbest_oracle** out) {
  return guarded([&] {
    require(g && out, "null argument");
    std::optional<std::uint64_t> budget;
    if (step_budget >= 0) budget = static_cast<std::uint64_t>(step_budget);
    *out = new arbest_oracle(g->graph, budget);
  });
}

void arbest_oracle_free(arbest_oracle* oracle) { delete oracle; }

arbest_status arbest_oracle_neighbor(arbest_oracle* oracle, uint32_t v, uint64_t i,
                                     uint32_t* neighbor, int* found) {
  return guarded([&] {
    require(oracle && neighbor && found, "null argument");
    require(v < oracle->oracle.num_vertices(), "vertex out of range");
    require(i >= 1, "neighbor index is 1-based");
    const auto u = oracle->oracle.neighbor_query(v, i);
    *found = u.has_value();
    *neighbor = u.value_or(0);
  });
}

arbest_status arbest_oracle_degree(arbest_oracle* oracle, uint32_t v, uint32_t* out) {
  return guarded([&] {
    require(oracle && out, "null argument");
    require(v < oracle->oracle.num_vertices(), "vertex out of range");
    *out = oracle->oracle.degree_query(v);
  });
}

arbest_status arbest_oracle_degree_by_search(arbest_oracle* oracle, uint32_t v, uint32_t* out) {
  return guarded([&] {
    require(oracle && out, "null argument");
    require(v < oracle->oracle.num_vertices(), "vertex out of range");
    *out = oracle->oracle.degree_via_binary_search(v);
  });
}

arbest_status arbest_oracle_charge_step(arbest_oracle* oracle) {
  return guarded([&] {
    require(oracle != nullptr, "null argument");
    oracle->counter.charge_step();
  });
}

void arbest_oracle_counts(const arbest_oracle* oracle, arbest_query_counts* out) {
  if (!oracle || !out) return;
  out->neighbor_queries = oracle->counter.neighbor_queries();
  out->degree_queries = oracle->counter.degree_queries();
  out->scheduler_steps = oracle->counter.scheduler_steps();
  out->exhausted = oracle->counter.exhausted();
}

arbest_status arbest_degeneracy(const arbest_graph* g, uint32_t* degeneracy, uint32_t* order) {
  return guarded([&] {
    require(g && degeneracy, "null argument");
    const arbest::DegeneracyResult r = arbest::matula_beck(g->graph);
    *degeneracy = r.degeneracy;
    if (order) std::copy(r.order.begin(), r.order.end(), order);
  });
}

arbest_status arbest_threshold_peel(const arbest_graph* g, double lambda, int largest_id_first,
                                    arbest_peel** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto tie = largest_id_first ? arbest::TieBreak::largest_id : arbest::TieBreak::smallest_id;
    *out = new arbest_peel{arbest::threshold_peel(g->graph, lambda, tie)};
  });
}

uint32_t arbest_peel_threshold(const arbest_peel* p) { return p ? p->seq.threshold : 0; }
size_t arbest_peel_removed_count(const arbest_peel* p) { return p ? p->seq.order.size() : 0; }
const uint32_t* arbest_peel_order(const arbest_peel* p) { return p ? p->seq.order.data() : nullptr; }
const uint32_t* arbest_peel_removal_degrees(const arbest_peel* p) {
  return p ? p->seq.removal_degrees.data() : nullptr;
}
size_t arbest_peel_core_size(const arbest_peel* p) { return p ? p->seq.core.size() : 0; }
const uint32_t* arbest_peel_core(const arbest_peel* p) { return p ? p->seq.core.data() : nullptr; }
void arbest_peel_free(arbest_peel* p) { delete p; }

arbest_status arbest_brute_force_arboricity(const arbest_graph* g, uint32_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = arbest::brute_force_arboricity(g->graph);
  });
}

arbest_status arbest_brute_force_density(const arbest_graph* g, uint64_t* num, uint64_t* den) {
  return guarded([&] {
    require(g && num && den, "null argument");
    const arbest::Rational r = arbest::brute_force_density(g->graph);
    *num = r.num;
    *den = r.den;
  });
}

arbest_status arbest_t_recursion(const arbest_graph* g, double lambda, double c,
                                 arbest_tvector** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new arbest_tvector{arbest::t_recursion(g->graph, lambda, c)};
  });
}

size_t arbest_tvector_size(const arbest_tvector* t) { return t ? t->t.values.size() : 0; }
const uint32_t* arbest_tvector_order(const arbest_tvector* t) {
  return t ? t->t.order.data() : nullptr;
}
const double* arbest_tvector_values(const arbest_tvector* t) {
  return t ? t->t.values.data() : nullptr;
}
double arbest_tvector_total(const arbest_tvector* t) { return t ? t->t.total : 0.0; }
void arbest_tvector_free(arbest_tvector* t) { delete t; }

void arbest_options_init(arbest_options* opts) {
  if (!opts) return;
  opts->algo = ARBEST_ALGO_FORTIFIED;
  opts->schedule = ARBEST_SCHEDULE_STAGGERED;
  opts->num_tests = 0;
  opts->budget_beta = 0;
  opts->unlimited_budget = 0;
  opts->early_stop = 1;
  opts->lanes = 0;
  opts->sample_constant = 1.0;
  opts->seed = 1;
}

arbest_status arbest_run_test(const arbest_graph* g, double lambda, const arbest_options* opts,
                              arbest_test_result* out) {
  return guarded([&] {
    require(g && out, "null argument");
    check_lambda(lambda);
    arbest_options storage;
    const arbest_options& o = options_or_default(opts, storage);
    const arbest::RngStream rng(o.seed);
    const arbest::TestOutcome t =
        o.algo == ARBEST_ALGO_WARMUP
            ? arbest::warmup_test(g->graph, lambda, warmup_config(o), rng)
            : arbest::fortified_test(g->graph, lambda, fortified_config(o), rng);
    out->yes = t.verdict == arbest::Verdict::yes;
    out->roots = t.roots;
    out->roots_finished = t.roots_finished;
    out->steps = t.steps;
    out->neighbor_queries = t.neighbor_queries;
    out->degree_queries = t.degree_queries;
    out->has_budget = t.budget.has_value();
    out->budget = t.budget.value_or(0);
  });
}

arbest_status arbest_compare(const arbest_graph* g, double lambda, const arbest_options* opts,
                             arbest_compare_result* out) {
  return guarded([&] {
    require(g && out, "null argument");
    check_lambda(lambda);
    arbest_options storage;
    const arbest_options& o = options_or_default(opts, storage);
    const arbest::RngStream rng(o.seed);
    const arbest::ComparatorResult r =
        o.algo == ARBEST_ALGO_WARMUP
            ? arbest::warmup_comparator(g->graph, lambda, warmup_config(o), rng)
            : arbest::fortified_comparator(g->graph, lambda, fortified_config(o), rng);
    out->yes = r.verdict == arbest::Verdict::yes;
    out->yes_votes = r.yes_votes;
    out->no_votes = r.no_votes;
    out->tests_run = r.tests_run;
    out->steps = r.steps;
    out->neighbor_queries = r.neighbor_queries;
    out->degree_queries = r.degree_queries;
  });
}

arbest_status arbest_estimate_run(const arbest_graph* g, const arbest_options* opts,
                                  arbest_estimate** out) {
  return guarded([&] {
    require(g && out, "null argument");
    arbest_options storage;
    const arbest_options& o = options_or_default(opts, storage);
    const arbest::RngStream rng(o.seed);
    auto e = std::make_unique<arbest_estimate>();
    e->report = o.algo == ARBEST_ALGO_WARMUP
                    ? arbest::warmup_estimate(g->graph, warmup_config(o), rng)
                    : arbest::estimate(g->graph, fortified_config(o), rng);
    e->report.seed = o.seed;
    *out = e.release();
  });
}

double arbest_estimate_lambda_hat(const arbest_estimate* e) {
  return e ? e->report.lambda_hat : 0.0;
}
size_t arbest_estimate_threshold_count(const arbest_estimate* e) {
  return e ? e->report.thresholds.size() : 0;
}

arbest_status arbest_estimate_threshold(const arbest_estimate* e, size_t i,
                                        arbest_threshold_record* out) {
  return guarded([&] {
    require(e && out, "null argument");
    require(i < e->report.thresholds.size(), "threshold index out of range");
    const arbest::ThresholdRecord& t = e->report.thresholds[i];
    out->lambda = t.lambda;
    out->yes = t.verdict == arbest::Verdict::yes;
    out->yes_votes = t.yes_votes;
    out->no_votes = t.no_votes;
    out->neighbor_queries = t.neighbor_queries;
    out->degree_queries = t.degree_queries;
    out->steps = t.steps;
  });
}

double arbest_estimate_wall_ms(const arbest_estimate* e) { return e ? e->report.wall_ms : 0.0; }
uint64_t arbest_estimate_seed(const arbest_estimate* e) { return e ? e->report.seed : 0; }
void arbest_estimate_free(arbest_estimate* e) { delete e; }

arbest_status arbest_calibrate(const arbest_graph* g, double lambda, double c, uint32_t runs,
                               uint64_t seed, arbest_calibration* out) {
  return guarded([&] {
    require(g && out, "null argument");
    check_lambda(lambda);
    const arbest::Calibration r =
        arbest::calibrate(g->graph, lambda, c, runs, arbest::RngStream(seed));
    out->lambda = r.lambda;
    out->c = r.c;
    out->s = r.s;
    out->beta_from_s = r.beta_from_s;
    out->beta_observed = r.beta_observed;
    out->mean_steps = r.mean_steps;
    out->max_steps = r.max_steps;
    out->runs = r.runs;
  });
}

arbest_status arbest_bench_run(const char* config_json, int timing, int as_json,
                               arbest_text** out) {
  return guarded([&] {
    require(config_json && out, "null argument");
    std::optional<bool> t;
    if (timing >= 0) t = timing > 0;
    const auto rows = arbest::run_benchmark(config_json, t);
    *out = new arbest_text{as_json ? arbest::to_json(rows) : arbest::to_csv(rows)};
  });
}

}  // extern "C"
