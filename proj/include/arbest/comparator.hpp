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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arbest/graph.hpp"
#include "arbest/peeling.hpp"
#include "arbest/rng.hpp"

// Pieces shared by the warm-up and fortified comparators: one test over
// sampled roots with a shared step budget, the majority vote, and the
// geometric threshold sweep.

namespace arbest {

enum class Verdict { no = 0, yes = 1 };

struct TestOutcome {
  Verdict verdict = Verdict::no;
  std::uint64_t roots = 0;           // sampled roots
  std::uint64_t roots_finished = 0;  // roots whose process terminated
  std::uint64_t steps = 0;
  std::uint64_t neighbor_queries = 0;
  std::uint64_t degree_queries = 0;
  std::optional<std::uint64_t> budget;
  EngineTally tally;
};

/// Samples each vertex with probability `root_probability` and runs one
/// process per root, in draw order, against a shared step budget. YES iff
/// every process terminates within the budget.
TestOutcome run_peeling_test(const StaticGraph& g, double root_probability,
                             const PeelPolicy& policy, std::optional<std::uint64_t> budget,
                             const RngStream& rng);

struct ComparatorResult {
  Verdict verdict = Verdict::no;
  std::uint32_t yes_votes = 0;
  std::uint32_t no_votes = 0;
  std::uint32_t tests_run = 0;
  std::uint64_t steps = 0;
  std::uint64_t neighbor_queries = 0;
  std::uint64_t degree_queries = 0;
};

using TestRunner = std::function<TestOutcome(const RngStream&)>;

/// Majority of `num_tests` (odd) independent tests; test i uses
/// rng.split(label, i). With `early_stop` the vote ends once decided.
ComparatorResult majority_vote(std::uint32_t num_tests, bool early_stop, const RngStream& rng,
                               const TestRunner& run_test);

/// 2 ceil(log2 n) + 1.
std::uint32_t default_num_tests(Vertex n);
std::uint32_t ceil_log2(std::uint64_t x);

struct ThresholdRecord {
  double lambda = 0;
  Verdict verdict = Verdict::no;
  std::uint32_t yes_votes = 0;
  std::uint32_t no_votes = 0;
  std::uint64_t neighbor_queries = 0;
  std::uint64_t degree_queries = 0;
  std::uint64_t steps = 0;
};

struct EstimateReport {
  double lambda_hat = 1;
  std::vector<ThresholdRecord> thresholds;
  std::uint64_t seed = 0;
  double wall_ms = 0;

  std::uint64_t total_neighbor_queries() const;
  std::uint64_t total_degree_queries() const;
  std::uint64_t total_queries() const { return total_neighbor_queries() + total_degree_queries(); }
  std::uint64_t total_steps() const;
};

using ThresholdComparator = std::function<ComparatorResult(double lambda, const RngStream&)>;

/// Thresholds n/2^i for i = 0, 1, ... while >= 1. Stops at the first NO and
/// reports that threshold; reports 1 when every threshold says YES.
/// Throws std::invalid_argument if n < 2.
EstimateReport sweep_thresholds(Vertex n, const RngStream& rng,
                                const ThresholdComparator& compare);

}  // namespace arbest
