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

struct WarmupConfig {
  double sample_constant = 1.0;  // roots at min(1, c_s ln n / lambda)
  std::uint32_t lanes = 0;       // 0 selects 3 ceil(log2 n)
  double budget_beta = 50.0;     // budget = ceil(beta * n * (ln n)^2 / lambda)
  std::uint32_t num_tests = 0;   // odd; 0 selects default_num_tests(n)
  bool unlimited_budget = false;
  Pacing pacing = Pacing::staggered;
  bool early_stop = true;
};

std::uint32_t default_lanes(Vertex n);
std::uint64_t warmup_budget(Vertex n, double lambda, double beta);

/// try-to-peel(v) with L lanes against the oracle's counter.
ProcessOutcome try_to_peel(const GraphOracle& oracle, Vertex v, double lambda,
                           std::uint32_t lanes, const RngStream& rng,
                           Pacing pacing = Pacing::staggered, EngineTally* tally = nullptr);

TestOutcome warmup_test(const StaticGraph& g, double lambda, const WarmupConfig& cfg,
                        const RngStream& rng);

ComparatorResult warmup_comparator(const StaticGraph& g, double lambda, const WarmupConfig& cfg,
                                   const RngStream& rng);

EstimateReport warmup_estimate(const StaticGraph& g, const WarmupConfig& cfg,
                               const RngStream& rng);

void validate(const WarmupConfig& cfg);

}  // namespace arbest
