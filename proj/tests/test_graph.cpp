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

#include <algorithm>
#include <sstream>
#include <string>

#include "arbest/errors.hpp"
#include "arbest/generators.hpp"
#include "arbest/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace arbest;

TEST_CASE("load path keeps input order") {
  const StaticGraph g = load_edge_list("3 2\n0 1\n1 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.neighbors(1)[0] == 0);
  CHECK(g.neighbors(1)[1] == 2);
}

TEST_CASE("load rejects bad input with its line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      load_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("2 1\n0 0\n") == 2);
  CHECK(line_of("3 2\n0 1\n1 0\n") == 3);
  CHECK(line_of("3 1\n0 3\n") == 2);
  CHECK(line_of("3 2\n0 1\n") != 0);
  CHECK(line_of("3 1\n0 x\n") == 2);
  CHECK(line_of("") != 0);
  CHECK(line_of("# header\n3 1\n\n1 2\n") == 0);
}

TEST_CASE("K4 from all pairs") {
  const StaticGraph g = load_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("adjacency is symmetric and sums to 2m") {
  RngStream rng(11);
  const StaticGraph g = testing::erdos_renyi(60, 0.1, rng);
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    total += g.degree(v);
    for (Vertex u : g.neighbors(v)) {
      CHECK(u != v);
      const auto back = g.neighbors(u);
      CHECK(std::count(back.begin(), back.end(), v) == 1);
    }
  }
  CHECK(total == 2 * g.num_edges());
}

TEST_CASE("neighbor and degree queries are charged") {
  const StaticGraph g = testing::path(3);
  QueryCounter ctr;
  GraphOracle o(g, ctr);
  CHECK(o.neighbor_query(1, 1) == Vertex{0});
  CHECK_FALSE(o.neighbor_query(0, 2).has_value());
  CHECK(ctr.neighbor_queries() == 2);
  CHECK(o.neighbor_query(1, 2) == o.neighbor_query(1, 2));
  CHECK(ctr.neighbor_queries() == 4);
  CHECK(o.degree_query(1) == 2);
  CHECK(ctr.degree_queries() == 1);
  CHECK(ctr.scheduler_steps() == 0);
}

TEST_CASE("degree queries on small graphs") {
  QueryCounter ctr;
  const StaticGraph k4 = testing::complete(4);
  CHECK(GraphOracle(k4, ctr).degree_query(0) == 3);
  const StaticGraph iso = testing::make_graph(3, {{0, 1}});
  CHECK(GraphOracle(iso, ctr).degree_query(2) == 0);
}

TEST_CASE("binary-search degree matches degree query within the probe bound") {
  auto probe_bound = [](Vertex n) {
    std::uint32_t b = 0;
    while ((std::uint64_t{1} << b) < n) ++b;
    return b + 1;
  };
  auto check_graph = [&](const StaticGraph& g) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      QueryCounter ctr;
      GraphOracle o(g, ctr);
      CHECK(o.degree_via_binary_search(v) == g.degree(v));
      CHECK(ctr.degree_queries() == 0);
      CHECK(ctr.neighbor_queries() <= probe_bound(g.num_vertices()));
    }
  };
  check_graph(testing::path(3));
  check_graph(testing::make_graph(4, {{1, 2}}));
  check_graph(testing::complete(9));
  RngStream rng(3);
  check_graph(testing::erdos_renyi(70, 0.2, rng));

  const StaticGraph s = testing::star(1024);
  QueryCounter ctr;
  GraphOracle o(s, ctr);
  CHECK(o.degree_via_binary_search(0) == 1024);
  CHECK(ctr.neighbor_queries() <= 11);
}

TEST_CASE("budget exhaustion leaves counts untouched") {
  const StaticGraph g = testing::path(4);
  QueryCounter ctr(std::uint64_t{3});
  GraphOracle o(g, ctr);
  ctr.charge_step(2);
  CHECK_FALSE(ctr.at_budget());
  CHECK_THROWS_AS(ctr.charge_step(2), BudgetExhausted);
  CHECK(ctr.exhausted());
  CHECK(ctr.scheduler_steps() == 2);
  CHECK_THROWS_AS(o.neighbor_query(0, 1), BudgetExhausted);
  CHECK_THROWS_AS(o.degree_query(0), BudgetExhausted);
  CHECK(ctr.neighbor_queries() == 0);
  CHECK(ctr.degree_queries() == 0);

  QueryCounter zero(std::uint64_t{0});
  CHECK(zero.at_budget());
  CHECK_THROWS_AS(zero.charge_step(), BudgetExhausted);
}

TEST_CASE("saved edge lists reload with identical answers") {
  GenSpec spec;
  spec.family = Family::planted_core;
  spec.n = 120;
  spec.lambda = 1;
  spec.d_mult = 10;
  spec.seed = 5;
  const StaticGraph g = generate(spec);
  std::ostringstream out;
  write_edge_list(out, g, describe(spec));
  CHECK(out.str().rfind("# family=planted-core", 0) == 0);
  const StaticGraph h = load_edge_list(out.str());
  REQUIRE(h.num_vertices() == g.num_vertices());
  REQUIRE(h.num_edges() == g.num_edges());
  QueryCounter a, b;
  GraphOracle oa(g, a), ob(h, b);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (std::uint64_t i = 1; i <= g.degree(v) + 1; ++i) {
      CHECK(oa.neighbor_query(v, i) == ob.neighbor_query(v, i));
    }
  }
}

TEST_CASE("missing file is an io error") {
  CHECK_THROWS_AS(load_edge_list_file("/nonexistent/graph.txt"), IoError);
}
