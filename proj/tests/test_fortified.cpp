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

#include <cmath>
#include <vector>

#include "arbest/baselines.hpp"
#include "arbest/fortified.hpp"
#include "arbest/generators.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace arbest;

namespace {

StaticGraph forest(Vertex n, std::uint64_t seed) {
  GenSpec spec;
  spec.family = Family::forest;
  spec.n = n;
  spec.seed = seed;
  return generate(spec);
}

StaticGraph planted(Vertex n, std::uint32_t lambda, std::uint32_t d_mult, std::uint64_t seed) {
  GenSpec spec;
  spec.family = Family::planted_core;
  spec.n = n;
  spec.lambda = lambda;
  spec.d_mult = d_mult;
  spec.seed = seed;
  return generate(spec);
}

TestOutcome verdict_only(Verdict v) {
  TestOutcome t;
  t.verdict = v;
  t.steps = 10;
  return t;
}

}  // namespace

TEST_CASE("budget and config validation") {
  CHECK(fortified_budget(10000, 1.0, 1000.0) == 10000000);
  CHECK(fortified_budget(10, 3.0, 1.0) == 4);
  ComparatorConfig cfg;
  cfg.num_tests = 2;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.num_tests = 3;
  cfg.budget_beta = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  CHECK(default_num_tests(1024) == 21);
  CHECK(default_num_tests(10000) == 29);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(1025) == 11);
}

TEST_CASE("majority vote counts and stops early") {
  const RngStream rng(1);
  int calls = 0;
  auto always_yes = [&](const RngStream&) {
    ++calls;
    return verdict_only(Verdict::yes);
  };
  const ComparatorResult a = majority_vote(21, true, rng, always_yes);
  CHECK(a.verdict == Verdict::yes);
  CHECK(a.tests_run == 11);
  CHECK(calls == 11);
  CHECK(a.steps == 110);
  const ComparatorResult b = majority_vote(21, false, rng, always_yes);
  CHECK(b.tests_run == 21);

  int i = 0;
  auto alternating = [&](const RngStream&) {
    return verdict_only(i++ % 3 == 0 ? Verdict::yes : Verdict::no);
  };
  const ComparatorResult c = majority_vote(5, false, rng, alternating);
  CHECK(c.yes_votes == 2);
  CHECK(c.no_votes == 3);
  CHECK(c.verdict == Verdict::no);
  CHECK_THROWS_AS(majority_vote(4, true, rng, always_yes), std::invalid_argument);

  // Tests see distinct streams.
  std::vector<std::uint64_t> seen;
  majority_vote(7, false, rng, [&](const RngStream& r) {
    seen.push_back(r.lineage());
    return verdict_only(Verdict::yes);
  });
  for (std::size_t x = 0; x < seen.size(); ++x)
    for (std::size_t y = x + 1; y < seen.size(); ++y) CHECK(seen[x] != seen[y]);
}

TEST_CASE("sweep stops at the first NO") {
  const RngStream rng(2);
  std::vector<double> asked;
  const EstimateReport r = sweep_thresholds(1000, rng, [&](double lambda, const RngStream&) {
    asked.push_back(lambda);
    ComparatorResult c;
    c.verdict = lambda < 100 ? Verdict::no : Verdict::yes;
    return c;
  });
  CHECK(asked == std::vector<double>{1000, 500, 250, 125, 62.5});
  CHECK(r.lambda_hat == 62.5);
  CHECK(r.thresholds.size() == 5);

  const EstimateReport all_yes = sweep_thresholds(8, rng, [](double, const RngStream&) {
    ComparatorResult c;
    c.verdict = Verdict::yes;
    return c;
  });
  CHECK(all_yes.lambda_hat == 1.0);
  CHECK(all_yes.thresholds.size() == 4);
  CHECK_THROWS_AS(sweep_thresholds(1, rng, [](double, const RngStream&) {
    return ComparatorResult{};
  }), std::invalid_argument);
}

TEST_CASE("edgeless graphs answer YES and estimate 1") {
  const StaticGraph g = testing::make_graph(64, {});
  CHECK(fortified_test(g, 1.0, ComparatorConfig{}, RngStream(1)).verdict == Verdict::yes);
  const EstimateReport r = estimate(g, ComparatorConfig{}, RngStream(2));
  CHECK(r.lambda_hat == 1.0);
  CHECK(r.thresholds.size() == 7);
}

TEST_CASE("comparator with one test runs exactly one") {
  const StaticGraph g = forest(500, 3);
  ComparatorConfig cfg;
  cfg.num_tests = 1;
  const ComparatorResult c = fortified_comparator(g, 1.0, cfg, RngStream(9));
  CHECK(c.tests_run == 1);
  CHECK((c.verdict == Verdict::yes) == (c.yes_votes == 1));
}

TEST_CASE("forest calibration: mean test cost within 10 S / lambda") {
  const StaticGraph g = forest(5000, 17);
  const Calibration cal = calibrate(g, 1.0, 1.0, 100, RngStream(18));
  CHECK(cal.runs == 100);
  CHECK(cal.s <= 100.0 * 5000);
  CHECK(cal.mean_steps <= 10.0 * cal.s);
  CHECK(cal.beta_from_s == doctest::Approx(10.0 * cal.s / 5000));
  CHECK_THROWS_AS(calibrate(testing::complete(6), 1.0, 1.0, 1, RngStream(1)),
                  NotPeelableError);
}

TEST_CASE("forest comparator with 21 tests always says YES") {
  const StaticGraph g = forest(10000, 23);
  ComparatorConfig cfg;
  cfg.num_tests = 21;
  cfg.budget_beta = 10.0 * t_recursion(g, 1.0).total / g.num_vertices();
  const RngStream base(24);
  int yes = 0;
  for (int i = 0; i < 1000; ++i) {
    yes += fortified_comparator(g, 1.0, cfg, base.split(i)).verdict == Verdict::yes;
  }
  CHECK(yes == 1000);
}

TEST_CASE("dense core vertices mostly never finish") {
  // Budget 2e5 rather than 1e7; terminating runs end far below it.
  const StaticGraph g = planted(2000, 1, 120, 31);
  Vertex core_vertex = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) >= 120) core_vertex = v;
  const RngStream base(32);
  const int runs = 100;
  const std::uint64_t budget = 200000;
  int stuck = 0;
  std::uint64_t longest_finish = 0;
  for (int i = 0; i < runs; ++i) {
    QueryCounter ctr(budget);
    GraphOracle o(g, ctr);
    const ProcessOutcome out = run_fortified(o, core_vertex, 1.0, base.split(i));
    if (out.terminated) {
      longest_finish = std::max(longest_finish, out.steps);
    } else {
      ++stuck;
    }
  }
  MESSAGE("stuck " << stuck << "/" << runs << ", longest finish " << longest_finish);
  CHECK(static_cast<double>(stuck) / runs >= 0.8 - 0.05);
  CHECK(longest_finish < budget / 10);
}

TEST_CASE("YES frequency does not drop as the threshold grows") {
  const StaticGraph g = planted(1000, 1, 120, 41);
  ComparatorConfig cfg;
  cfg.budget_beta = 50;
  const RngStream base(42);
  const int runs = 200;
  double prev = -1, first = -1;
  for (double lambda : {1.0, 2.0, 2.25, 2.5, 2.75, 3.0, 4.0}) {
    int yes = 0;
    for (int i = 0; i < runs; ++i) {
      yes += fortified_test(g, lambda, cfg, base.split(i)).verdict == Verdict::yes;
    }
    const double freq = static_cast<double>(yes) / runs;
    MESSAGE("lambda " << lambda << " yes " << freq);
    if (prev >= 0) {
      const double sigma = std::sqrt((freq * (1 - freq) + prev * (1 - prev)) / runs);
      CHECK(freq >= prev - 2 * sigma);
    }
    if (first < 0) first = freq;
    prev = freq;
  }
  CHECK(first < prev);
}

TEST_CASE("estimate lands in the window on a small clique union") {
  GenSpec spec;
  spec.family = Family::clique_union;
  spec.n = 2000;
  spec.lambda = 4;
  spec.seed = 2;
  const StaticGraph g = generate(spec);
  const double truth = lambda_truth(spec, g).lower;
  CHECK(truth == 5);
  ComparatorConfig cfg;
  cfg.budget_beta = 100;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const EstimateReport r = estimate(g, cfg, RngStream(seed));
    CHECK(r.lambda_hat <= truth);
    CHECK(truth / r.lambda_hat <= 240);
    CHECK(r.total_queries() == r.total_steps());
  }
}
