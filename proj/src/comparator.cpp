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

#include "arbest/comparator.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "arbest/sampler.hpp"

namespace arbest {

namespace {

constexpr std::uint64_t kRootLabel = 0x1200;
constexpr std::uint64_t kTestLabel = 0x7E57;
constexpr std::uint64_t kThresholdLabel = 0x7A4D;

}  // namespace

TestOutcome run_peeling_test(const StaticGraph& g, double root_probability,
                             const PeelPolicy& policy, std::optional<std::uint64_t> budget,
                             const RngStream& rng) {
  TestOutcome out;
  out.budget = budget;
  QueryCounter counter(budget);
  GraphOracle oracle(g, counter);

  RngStream draw = rng;
  const auto roots = sample_subset(g.num_vertices(), root_probability, draw);
  out.roots = roots.size();
  out.verdict = Verdict::yes;
  for (std::uint64_t r : roots) {
    const auto v = static_cast<Vertex>(r);
    const ProcessOutcome p = run_process(oracle, v, policy, rng.split(kRootLabel, v), &out.tally);
    if (!p.terminated) {
      out.verdict = Verdict::no;
      break;
    }
    ++out.roots_finished;
  }
  out.steps = counter.scheduler_steps();
  out.neighbor_queries = counter.neighbor_queries();
  out.degree_queries = counter.degree_queries();
  return out;
}

ComparatorResult majority_vote(std::uint32_t num_tests, bool early_stop, const RngStream& rng,
                               const TestRunner& run_test) {
  if (num_tests % 2 == 0) throw std::invalid_argument("number of tests must be odd");
  ComparatorResult out;
  const std::uint32_t majority = num_tests / 2 + 1;
  for (std::uint32_t i = 0; i < num_tests; ++i) {
    const TestOutcome t = run_test(rng.split(kTestLabel, i));
    ++out.tests_run;
    (t.verdict == Verdict::yes ? out.yes_votes : out.no_votes) += 1;
    out.steps += t.steps;
    out.neighbor_queries += t.neighbor_queries;
    out.degree_queries += t.degree_queries;
    if (early_stop && (out.yes_votes >= majority || out.no_votes >= majority)) break;
  }
  out.verdict = out.yes_votes > out.no_votes ? Verdict::yes : Verdict::no;
  return out;
}

std::uint32_t ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(x - 1));
}

std::uint32_t default_num_tests(Vertex n) { return 2 * ceil_log2(n) + 1; }

std::uint64_t EstimateReport::total_neighbor_queries() const {
  std::uint64_t s = 0;
  for (const auto& t : thresholds) s += t.neighbor_queries;
  return s;
}

std::uint64_t EstimateReport::total_degree_queries() const {
  std::uint64_t s = 0;
  for (const auto& t : thresholds) s += t.degree_queries;
  return s;
}

std::uint64_t EstimateReport::total_steps() const {
  std::uint64_t s = 0;
  for (const auto& t : thresholds) s += t.steps;
  return s;
}

EstimateReport sweep_thresholds(Vertex n, const RngStream& rng,
                                const ThresholdComparator& compare) {
  if (n < 2) throw std::invalid_argument("estimate needs at least 2 vertices");
  const auto start = std::chrono::steady_clock::now();
  EstimateReport report;
  report.lambda_hat = 1.0;
  for (std::uint32_t i = 0;; ++i) {
    const double lambda = std::ldexp(static_cast<double>(n), -static_cast<int>(i));
    if (lambda < 1.0) break;
    const ComparatorResult c = compare(lambda, rng.split(kThresholdLabel, i));
    report.thresholds.push_back({lambda, c.verdict, c.yes_votes, c.no_votes, c.neighbor_queries,
                                 c.degree_queries, c.steps});
    if (c.verdict == Verdict::no) {
      report.lambda_hat = lambda;
      break;
    }
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace arbest
