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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <string>
#include <vector>

#include "arbest/arbest.h"
#include "doctest.h"

namespace {

arbest_graph* triangle_plus_pendant() {
  const std::vector<uint32_t> e = {0, 1, 1, 2, 0, 2, 2, 3};
  arbest_graph* g = nullptr;
  REQUIRE(arbest_graph_from_edges(4, e.data(), 4, &g) == ARBEST_OK);
  return g;
}

arbest_graph* generated(const char* family, uint32_t n, uint32_t lambda = 1) {
  arbest_gen_spec spec;
  arbest_gen_spec_init(&spec);
  spec.family = family;
  spec.n = n;
  spec.lambda = lambda;
  arbest_graph* g = nullptr;
  REQUIRE(arbest_generate(&spec, &g) == ARBEST_OK);
  return g;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(arbest_version()).size() > 0);
  CHECK(std::string(arbest_status_name(ARBEST_OK)) == "ok");
  CHECK(std::string(arbest_status_name(ARBEST_ERR_PARSE)) == "parse error");
  CHECK(std::string(arbest_status_name(static_cast<arbest_status>(1234))) == "unknown status");
}

TEST_CASE("loading text and parse errors") {
  const std::string good = "# comment\n3 2\n0 1\n1 2\n";
  arbest_graph* g = nullptr;
  REQUIRE(arbest_graph_load_text(good.data(), good.size(), &g) == ARBEST_OK);
  CHECK(arbest_graph_num_vertices(g) == 3);
  CHECK(arbest_graph_num_edges(g) == 2);
  CHECK(std::string(arbest_last_error()).empty());
  CHECK(arbest_last_error_line() == 0);

  arbest_text* text = nullptr;
  REQUIRE(arbest_graph_to_text(g, "hello", &text) == ARBEST_OK);
  const std::string dumped(arbest_text_data(text), arbest_text_size(text));
  CHECK(dumped.rfind("# hello\n", 0) == 0);
  arbest_text_free(text);
  arbest_graph_free(g);

  const std::string bad = "3 2\n0 1\n1 1\n";
  arbest_graph* h = nullptr;
  CHECK(arbest_graph_load_text(bad.data(), bad.size(), &h) == ARBEST_ERR_PARSE);
  CHECK(h == nullptr);
  CHECK(arbest_last_error_line() == 3);
  CHECK(std::string(arbest_last_error()).size() > 0);
}

TEST_CASE("file round trip and missing files") {
  arbest_graph* g = triangle_plus_pendant();
  const std::string path = "capi_roundtrip.txt";
  REQUIRE(arbest_graph_save_file(g, path.c_str(), nullptr) == ARBEST_OK);
  arbest_graph* back = nullptr;
  REQUIRE(arbest_graph_load_file(path.c_str(), &back) == ARBEST_OK);
  CHECK(arbest_graph_num_edges(back) == 4);
  arbest_graph_free(back);
  arbest_graph_free(g);
  std::remove(path.c_str());
  arbest_graph* none = nullptr;
  CHECK(arbest_graph_load_file("does/not/exist.txt", &none) == ARBEST_ERR_IO);
}

TEST_CASE("invalid edge lists and null arguments") {
  const std::vector<uint32_t> loop = {1, 1};
  arbest_graph* g = nullptr;
  CHECK(arbest_graph_from_edges(3, loop.data(), 1, &g) != ARBEST_OK);
  CHECK(arbest_graph_from_edges(3, nullptr, 0, nullptr) == ARBEST_ERR_INVALID_ARGUMENT);
  CHECK(arbest_graph_num_vertices(nullptr) == 0);
}

TEST_CASE("generators through the C API") {
  arbest_gen_spec spec;
  arbest_gen_spec_init(&spec);
  spec.family = "clique-union";
  spec.n = 100;
  spec.lambda = 3;
  spec.seed = 9;
  arbest_graph* g = nullptr;
  REQUIRE(arbest_generate(&spec, &g) == ARBEST_OK);
  uint32_t lo = 0, hi = 0;
  REQUIRE(arbest_lambda_truth(&spec, g, &lo, &hi) == ARBEST_OK);
  CHECK(lo == 4);
  CHECK(hi == 4);
  arbest_text* d = nullptr;
  REQUIRE(arbest_gen_describe(&spec, &d) == ARBEST_OK);
  CHECK(std::string(arbest_text_data(d)).find("family=clique-union") != std::string::npos);
  arbest_text_free(d);
  arbest_graph_free(g);

  spec.family = "nope";
  CHECK(arbest_generate(&spec, &g) == ARBEST_ERR_INVALID_ARGUMENT);
  spec.family = "planted-core";
  spec.n = 50;
  CHECK(arbest_generate(&spec, &g) == ARBEST_ERR_GENERATION);
}

TEST_CASE("oracle queries and budget") {
  arbest_graph* g = triangle_plus_pendant();
  arbest_oracle* o = nullptr;
  REQUIRE(arbest_oracle_create(g, 2, &o) == ARBEST_OK);
  uint32_t deg = 0, nb = 0;
  int found = 0;
  CHECK(arbest_oracle_degree(o, 2, &deg) == ARBEST_OK);
  CHECK(deg == 3);
  CHECK(arbest_oracle_neighbor(o, 2, 3, &nb, &found) == ARBEST_OK);
  CHECK(found == 1);
  CHECK(nb == 3);
  CHECK(arbest_oracle_neighbor(o, 3, 2, &nb, &found) == ARBEST_OK);
  CHECK(found == 0);
  CHECK(arbest_oracle_neighbor(o, 3, 0, &nb, &found) == ARBEST_ERR_INVALID_ARGUMENT);
  CHECK(arbest_oracle_degree(o, 9, &deg) == ARBEST_ERR_INVALID_ARGUMENT);
  CHECK(arbest_oracle_degree_by_search(o, 2, &deg) == ARBEST_OK);
  CHECK(deg == 3);
  CHECK(arbest_oracle_charge_step(o) == ARBEST_OK);
  CHECK(arbest_oracle_charge_step(o) == ARBEST_OK);
  CHECK(arbest_oracle_charge_step(o) == ARBEST_ERR_BUDGET_EXHAUSTED);
  arbest_query_counts c;
  arbest_oracle_counts(o, &c);
  CHECK(c.degree_queries == 1);
  CHECK(c.neighbor_queries >= 2);
  CHECK(c.scheduler_steps == 2);
  CHECK(c.exhausted == 1);
  arbest_oracle_free(o);
  arbest_graph_free(g);
}

TEST_CASE("exact baselines") {
  arbest_graph* g = triangle_plus_pendant();
  uint32_t d = 0;
  std::vector<uint32_t> order(4);
  REQUIRE(arbest_degeneracy(g, &d, order.data()) == ARBEST_OK);
  CHECK(d == 2);
  CHECK(order[0] == 3);

  arbest_peel* p = nullptr;
  REQUIRE(arbest_threshold_peel(g, 1.0, 0, &p) == ARBEST_OK);
  CHECK(arbest_peel_threshold(p) == 2);
  CHECK(arbest_peel_removed_count(p) == 4);
  CHECK(arbest_peel_core_size(p) == 0);
  CHECK(arbest_peel_order(p)[0] == 0);
  CHECK(arbest_peel_removal_degrees(p)[0] == 2);
  arbest_peel_free(p);

  REQUIRE(arbest_threshold_peel(g, 0.5, 0, &p) == ARBEST_OK);
  CHECK(arbest_peel_core_size(p) == 3);
  arbest_peel_free(p);

  uint32_t a = 0;
  REQUIRE(arbest_brute_force_arboricity(g, &a) == ARBEST_OK);
  CHECK(a == 2);
  uint64_t num = 0, den = 0;
  REQUIRE(arbest_brute_force_density(g, &num, &den) == ARBEST_OK);
  CHECK(num == den);

  arbest_tvector* t = nullptr;
  REQUIRE(arbest_t_recursion(g, 1.0, 1.0, &t) == ARBEST_OK);
  CHECK(arbest_tvector_size(t) == 4);
  double sum = 0;
  for (size_t i = 0; i < 4; ++i) sum += arbest_tvector_values(t)[i];
  CHECK(arbest_tvector_total(t) == doctest::Approx(sum));
  CHECK(arbest_tvector_order(t)[0] == 0);
  arbest_tvector_free(t);
  CHECK(arbest_t_recursion(g, 0.5, 1.0, &t) == ARBEST_ERR_NOT_PEELABLE);
  arbest_graph_free(g);

  arbest_graph* big = generated("forest", 40);
  CHECK(arbest_brute_force_arboricity(big, &a) == ARBEST_ERR_SIZE_LIMIT);
  arbest_graph_free(big);
}

TEST_CASE("comparators and estimation") {
  arbest_graph* g = generated("forest", 500);
  arbest_options opts;
  arbest_options_init(&opts);
  opts.num_tests = 3;
  opts.budget_beta = 200;
  opts.seed = 4;

  arbest_test_result tr;
  REQUIRE(arbest_run_test(g, 1.0, &opts, &tr) == ARBEST_OK);
  CHECK(tr.has_budget == 1);
  CHECK(tr.budget == 100000);
  CHECK(tr.roots == tr.roots_finished);
  CHECK(tr.yes == 1);

  arbest_compare_result cr;
  REQUIRE(arbest_compare(g, 1.0, &opts, &cr) == ARBEST_OK);
  CHECK(cr.yes == 1);
  CHECK(cr.tests_run == 2);
  CHECK(cr.steps == cr.neighbor_queries + cr.degree_queries);

  opts.algo = ARBEST_ALGO_WARMUP;
  opts.budget_beta = 0;
  REQUIRE(arbest_compare(g, 1.0, &opts, &cr) == ARBEST_OK);
  CHECK(cr.tests_run >= 2);

  opts.algo = ARBEST_ALGO_FORTIFIED;
  opts.budget_beta = 200;
  arbest_estimate* e = nullptr;
  REQUIRE(arbest_estimate_run(g, &opts, &e) == ARBEST_OK);
  CHECK(arbest_estimate_lambda_hat(e) == 1.0);
  CHECK(arbest_estimate_seed(e) == 4);
  const size_t k = arbest_estimate_threshold_count(e);
  CHECK(k == 9);
  arbest_threshold_record rec;
  REQUIRE(arbest_estimate_threshold(e, 0, &rec) == ARBEST_OK);
  CHECK(rec.lambda == 500.0);
  CHECK(arbest_estimate_threshold(e, k, &rec) == ARBEST_ERR_INVALID_ARGUMENT);
  CHECK(arbest_estimate_wall_ms(e) >= 0.0);
  arbest_estimate_free(e);

  opts.num_tests = 4;
  CHECK(arbest_compare(g, 1.0, &opts, &cr) == ARBEST_ERR_INVALID_ARGUMENT);
  arbest_graph_free(g);
}

TEST_CASE("calibration") {
  arbest_graph* g = generated("forest", 1000);
  arbest_calibration cal;
  REQUIRE(arbest_calibrate(g, 1.0, 1.0, 5, 3, &cal) == ARBEST_OK);
  CHECK(cal.runs == 5);
  CHECK(cal.beta_from_s == doctest::Approx(10.0 * cal.s / 1000));
  CHECK(cal.mean_steps > 0);
  arbest_graph_free(g);

  arbest_graph* k = generated("clique-union", 50, 5);
  CHECK(arbest_calibrate(k, 1.0, 1.0, 1, 3, &cal) == ARBEST_ERR_NOT_PEELABLE);
  arbest_graph_free(k);
}

TEST_CASE("bench runner") {
  const char* cfg = R"({"cells": [{"family": "forest", "n": 200, "seeds": [1],
                        "tests": 1, "budget_beta": 100}]})";
  arbest_text* out = nullptr;
  REQUIRE(arbest_bench_run(cfg, 0, 0, &out) == ARBEST_OK);
  const std::string csv = arbest_text_data(out);
  CHECK(csv.rfind("graph_id,", 0) == 0);
  CHECK(csv.find(",YES,") != std::string::npos);
  arbest_text_free(out);
  REQUIRE(arbest_bench_run(cfg, -1, 1, &out) == ARBEST_OK);
  CHECK(std::string(arbest_text_data(out)).find("\"lambda_hat\"") != std::string::npos);
  arbest_text_free(out);
  CHECK(arbest_bench_run("{", 0, 0, &out) == ARBEST_ERR_INVALID_ARGUMENT);
}
