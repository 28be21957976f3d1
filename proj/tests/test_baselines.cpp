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
#include <numeric>
#include <set>
#include <vector>

#include "arbest/baselines.hpp"
#include "arbest/errors.hpp"
#include "arbest/generators.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace arbest;

namespace {

// Peel the slow way: rescan for the smallest eligible id every round.
std::vector<Vertex> reference_peel(const StaticGraph& g, std::uint32_t tau,
                                   std::vector<Vertex>* core) {
  const Vertex n = g.num_vertices();
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  for (;;) {
    bool found = false;
    for (Vertex v = 0; v < n && !found; ++v) {
      if (gone[v]) continue;
      std::uint32_t d = 0;
      for (Vertex u : g.neighbors(v)) d += !gone[u];
      if (d <= tau) {
        gone[v] = 1;
        order.push_back(v);
        found = true;
      }
    }
    if (!found) break;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) core->push_back(v);
  return order;
}

StaticGraph disjoint_k4_and_tree(Vertex tree_size) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) e.emplace_back(u, v);
  for (Vertex v = 5; v < 4 + tree_size; ++v) e.emplace_back(4 + (v - 4) / 2, v);
  return testing::make_graph(4 + tree_size, e);
}

}  // namespace

TEST_CASE("degeneracy of small graphs") {
  CHECK(matula_beck(testing::path(10)).degeneracy == 1);
  CHECK(matula_beck(testing::complete(4)).degeneracy == 3);
  const StaticGraph k4p = testing::make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                                  {2, 3}, {2, 4}});
  const auto r = matula_beck(k4p);
  CHECK(r.degeneracy == 3);
  CHECK(r.order.front() == 4);
  CHECK(matula_beck(StaticGraph::from_edges(0, {})).order.empty());
}

TEST_CASE("degeneracy order is a permutation with smallest-id ties") {
  RngStream rng(2);
  const StaticGraph g = testing::erdos_renyi(80, 0.08, rng);
  const auto r = matula_beck(g);
  std::vector<Vertex> sorted = r.order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> ids(g.num_vertices());
  std::iota(ids.begin(), ids.end(), 0);
  CHECK(sorted == ids);
  CHECK(matula_beck(testing::cycle(6)).order.front() == 0);
}

TEST_CASE("threshold peel examples") {
  const auto tree = threshold_peel(testing::path(30), 1.0);
  CHECK(tree.order.size() == 30);
  CHECK(tree.core.empty());

  const auto k4 = threshold_peel(testing::complete(4), 1.0);
  CHECK(k4.threshold == 2);
  CHECK(k4.order.empty());
  CHECK(k4.core == std::vector<Vertex>{0, 1, 2, 3});

  const auto mixed = threshold_peel(disjoint_k4_and_tree(100), 1.0);
  CHECK(mixed.order.size() == 100);
  CHECK(mixed.core == std::vector<Vertex>{0, 1, 2, 3});

  CHECK(peel_threshold(1.5) == 3);
  CHECK(peel_threshold(0.5) == 1);
  CHECK_THROWS_AS(peel_threshold(0.4), std::invalid_argument);
}

TEST_CASE("threshold peel agrees with the rescanning reference") {
  RngStream rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const StaticGraph g = testing::erdos_renyi(40, 0.05 + 0.01 * (trial % 10), rng);
    for (double lambda : {0.5, 1.0, 1.5, 2.0}) {
      const auto fast = threshold_peel(g, lambda);
      std::vector<Vertex> core;
      const auto slow = reference_peel(g, fast.threshold, &core);
      CHECK(fast.order == slow);
      CHECK(fast.core == core);
      CHECK(fast.order.size() + fast.core.size() == g.num_vertices());
      for (std::size_t i = 0; i < fast.order.size(); ++i) {
        CHECK(fast.removal_degrees[i] <= fast.threshold);
      }
      std::set<Vertex> in_core(fast.core.begin(), fast.core.end());
      for (Vertex v : fast.core) {
        std::uint32_t inside = 0;
        for (Vertex u : g.neighbors(v)) inside += in_core.count(u);
        CHECK(inside > fast.threshold);
      }
      const auto rev = threshold_peel(g, lambda, TieBreak::largest_id);
      CHECK(rev.core == fast.core);
      CHECK(rev.order.size() == fast.order.size());
    }
  }
}

TEST_CASE("brute force arboricity and density") {
  CHECK(brute_force_arboricity(testing::path(2)) == 1);
  CHECK(brute_force_arboricity(testing::complete(4)) == 2);
  CHECK(brute_force_arboricity(testing::cycle(5)) == 2);
  CHECK(brute_force_density(testing::path(2)) == Rational{1, 2});
  const Rational k4 = brute_force_density(testing::complete(4));
  CHECK(k4.num == 3);
  CHECK(k4.den == 2);
  const StaticGraph tri_pendant = testing::make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(brute_force_density(tri_pendant) == Rational{1, 1});
  CHECK_THROWS_AS(brute_force_arboricity(testing::path(23)), SizeLimitError);
  CHECK_THROWS_AS(brute_force_density(testing::path(23)), SizeLimitError);
}

TEST_CASE("clique arboricity is ceil(k/2) for k up to 22") {
  for (Vertex k = 2; k <= 22; ++k) {
    CHECK(brute_force_arboricity(testing::complete(k)) == (k + 1) / 2);
  }
}

TEST_CASE("sandwich inequalities on random small graphs") {
  RngStream rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const StaticGraph g = testing::erdos_renyi(12, 0.1 + 0.05 * (trial % 12), rng);
    const std::uint32_t lam = brute_force_arboricity(g);
    const Rational dens = brute_force_density(g);
    const std::uint32_t degen = matula_beck(g).degeneracy;
    CHECK(dens <= Rational{lam, 1});
    // lam <= ceil(dens + 1/2), i.e. 2 lam < 2 dens + 3.
    CHECK(Rational{2 * lam, 1} < Rational{2 * dens.num + 3 * dens.den, dens.den});
    if (g.num_edges() > 0) {
      CHECK(lam <= degen);
      CHECK(degen <= 2 * lam - 1);
    }
  }
}

TEST_CASE("arboricity can exceed density plus one") {
  std::vector<Edge> e;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v)
      if (!(u == 0 && v == 1)) e.emplace_back(u, v);
  const StaticGraph g = testing::make_graph(5, e);
  CHECK(brute_force_arboricity(g) == 3);
  CHECK(brute_force_density(g) == Rational{9, 5});
}

TEST_CASE("t recursion on a path") {
  // Order (a, b, c) = (0, 1, 2) under smallest-id peeling of 0-1-2.
  const TVector t = t_recursion(testing::path(3), 1.0, 1.0);
  REQUIRE(t.values.size() == 3);
  CHECK(t.order == std::vector<Vertex>{0, 1, 2});
  CHECK(t.values[0] == doctest::Approx(10.0));
  CHECK(t.values[1] == doctest::Approx(24.0));
  CHECK(t.values[2] == doctest::Approx(19.6));
  CHECK(t.total == doctest::Approx(53.6));

  const TVector iso = t_recursion(StaticGraph::from_edges(1, {}), 3.0, 2.0);
  CHECK(iso.values == std::vector<double>{0.0});
  CHECK(iso.total == 0.0);
  CHECK_THROWS_AS(t_recursion(testing::complete(4), 1.0), NotPeelableError);
}

TEST_CASE("t recursion lower bound per vertex and S bound") {
  // Forests at lambda 1 and clique unions at lambda + 1 both have m <= lambda n.
  for (int trial = 0; trial < 1000; ++trial) {
    GenSpec spec;
    spec.family = trial % 2 == 0 ? Family::forest : Family::clique_union;
    spec.n = 50 + trial;
    spec.lambda = 1 + trial % 5;
    spec.seed = trial + 1;
    const StaticGraph g = generate(spec);
    const double lambda = spec.family == Family::forest ? 1.0 : spec.lambda + 1.0;
    const TVector t = t_recursion(g, lambda, 1.0);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      CHECK(t.values[i] >= 10.0 * g.degree(t.order[i]) / lambda - 1e-9);
    }
    CHECK(t.total <= 100.0 * g.num_vertices());
  }
}
