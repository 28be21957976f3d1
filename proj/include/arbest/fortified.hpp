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

#include "arbest/comparator.hpp"
#include "arbest/graph.hpp"
#include "arbest/scheduler.hpp"

namespace arbest {

struct ComparatorConfig {
  std::uint32_t num_tests = 0;  // odd; 0 selects default_num_tests(n)
  double budget_beta = 1000.0;  // budget = ceil(beta * n / lambda) steps
  bool unlimited_budget = false;
  Pacing pacing = Pacing::staggered;
  bool early_stop = true;
};

/// ceil(beta * n / lambda).
std::uint64_t fortified_budget(Vertex n, double lambda, double beta);

/// F(v) against the budget carried by the oracle's counter.
ProcessOutcome run_fortified(const GraphOracle& oracle, Vertex v, double lambda,
                             const RngStream& rng, EngineTally* tally = nullptr);

/// Roots at probability min(1, 1/lambda), F on each.
TestOutcome fortified_test(const StaticGraph& g, double lambda, const ComparatorConfig& cfg,
                           const RngStream& rng);

ComparatorResult fortified_comparator(const StaticGraph& g, double lambda,
                                      const ComparatorConfig& cfg, const RngStream& rng);

EstimateReport estimate(const StaticGraph& g, const ComparatorConfig& cfg, const RngStream& rng);

struct Calibration {
  double lambda = 0;
  double c = 1;
  double s = 0;                 // sum of T over the peel order
  double beta_from_s = 0;       // 10 S / n: budget 10 S / lambda
  double beta_observed = 0;     // largest steps * lambda / n over the runs
  double mean_steps = 0;        // per test, unlimited budget
  std::uint64_t max_steps = 0;
  std::uint32_t runs = 0;
};

/// Computes S with t_recursion and measures unlimited-budget test cost over
/// `runs` seeds. Throws NotPeelableError if g does not peel at lambda.
Calibration calibrate(const StaticGraph& g, double lambda, double c, std::uint32_t runs,
                      const RngStream& rng);

void validate(const ComparatorConfig& cfg);

}  // namespace arbest
