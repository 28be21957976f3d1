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

#include "arbest/warmup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arbest {

namespace {

std::uint32_t lanes_for(const WarmupConfig& cfg, Vertex n) {
  return cfg.lanes == 0 ? default_lanes(n) : cfg.lanes;
}

std::uint32_t tests_for(const WarmupConfig& cfg, Vertex n) {
  return cfg.num_tests == 0 ? default_num_tests(n) : cfg.num_tests;
}

double ln_n(Vertex n) { return std::log(std::max<double>(2.0, n)); }

}  // namespace

void validate(const WarmupConfig& cfg) {
  if (cfg.num_tests != 0 && cfg.num_tests % 2 == 0) {
    throw std::invalid_argument("number of tests must be odd");
  }
  if (!(cfg.budget_beta > 0.0)) throw std::invalid_argument("budget beta must be positive");
  if (!(cfg.sample_constant > 0.0)) throw std::invalid_argument("sample constant must be positive");
}

std::uint32_t default_lanes(Vertex n) { return std::max<std::uint32_t>(1, 3 * ceil_log2(n)); }

std::uint64_t warmup_budget(Vertex n, double lambda, double beta) {
  const double l = ln_n(n);
  return static_cast<std::uint64_t>(std::ceil(beta * static_cast<double>(n) * l * l / lambda));
}

ProcessOutcome try_to_peel(const GraphOracle& oracle, Vertex v, double lambda,
                           std::uint32_t lanes, const RngStream& rng, Pacing pacing,
                           EngineTally* tally) {
  const PeelPolicy policy = PeelPolicy::warmup(lambda, lanes, pacing);
  return run_process(oracle, v, policy, rng, tally);
}

TestOutcome warmup_test(const StaticGraph& g, double lambda, const WarmupConfig& cfg,
                        const RngStream& rng) {
  validate(cfg);
  const Vertex n = g.num_vertices();
  const PeelPolicy policy = PeelPolicy::warmup(lambda, lanes_for(cfg, n), cfg.pacing);
  std::optional<std::uint64_t> budget;
  if (!cfg.unlimited_budget) budget = warmup_budget(n, lambda, cfg.budget_beta);
  const double p = std::min(1.0, cfg.sample_constant * ln_n(n) / lambda);
  return run_peeling_test(g, p, policy, budget, rng);
}

ComparatorResult warmup_comparator(const StaticGraph& g, double lambda, const WarmupConfig& cfg,
                                   const RngStream& rng) {
  validate(cfg);
  return majority_vote(tests_for(cfg, g.num_vertices()), cfg.early_stop, rng,
                       [&](const RngStream& r) { return warmup_test(g, lambda, cfg, r); });
}

EstimateReport warmup_estimate(const StaticGraph& g, const WarmupConfig& cfg,
                               const RngStream& rng) {
  validate(cfg);
  return sweep_thresholds(g.num_vertices(), rng, [&](double lambda, const RngStream& r) {
    return warmup_comparator(g, lambda, cfg, r);
  });
}

}  // namespace arbest
