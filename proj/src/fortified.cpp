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

#include "arbest/fortified.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arbest/baselines.hpp"

namespace arbest {

namespace {

constexpr std::uint64_t kCalibrationLabel = 0xCA1B;

std::uint32_t tests_for(const ComparatorConfig& cfg, Vertex n) {
  return cfg.num_tests == 0 ? default_num_tests(n) : cfg.num_tests;
}

}  // namespace

void validate(const ComparatorConfig& cfg) {
  if (cfg.num_tests != 0 && cfg.num_tests % 2 == 0) {
    throw std::invalid_argument("number of tests must be odd");
  }
  if (!(cfg.budget_beta > 0.0)) throw std::invalid_argument("budget beta must be positive");
}

std::uint64_t fortified_budget(Vertex n, double lambda, double beta) {
  return static_cast<std::uint64_t>(std::ceil(beta * static_cast<double>(n) / lambda));
}

ProcessOutcome run_fortified(const GraphOracle& oracle, Vertex v, double lambda,
                             const RngStream& rng, EngineTally* tally) {
  const PeelPolicy policy = PeelPolicy::fortified(lambda);
  return run_process(oracle, v, policy, rng, tally);
}

TestOutcome fortified_test(const StaticGraph& g, double lambda, const ComparatorConfig& cfg,
                           const RngStream& rng) {
  validate(cfg);
  const PeelPolicy policy = PeelPolicy::fortified(lambda, cfg.pacing);
  std::optional<std::uint64_t> budget;
  if (!cfg.unlimited_budget) budget = fortified_budget(g.num_vertices(), lambda, cfg.budget_beta);
  return run_peeling_test(g, std::min(1.0, 1.0 / lambda), policy, budget, rng);
}

ComparatorResult fortified_comparator(const StaticGraph& g, double lambda,
                                      const ComparatorConfig& cfg, const RngStream& rng) {
  validate(cfg);
  return majority_vote(tests_for(cfg, g.num_vertices()), cfg.early_stop, rng,
                       [&](const RngStream& r) { return fortified_test(g, lambda, cfg, r); });
}

EstimateReport estimate(const StaticGraph& g, const ComparatorConfig& cfg, const RngStream& rng) {
  validate(cfg);
  return sweep_thresholds(g.num_vertices(), rng, [&](double lambda, const RngStream& r) {
    return fortified_comparator(g, lambda, cfg, r);
  });
}

Calibration calibrate(const StaticGraph& g, double lambda, double c, std::uint32_t runs,
                      const RngStream& rng) {
  Calibration out;
  out.lambda = lambda;
  out.c = c;
  out.s = t_recursion(g, lambda, c).total;
  const double n = std::max<double>(1.0, g.num_vertices());
  out.beta_from_s = 10.0 * out.s / n;
  out.runs = runs;
  ComparatorConfig cfg;
  cfg.unlimited_budget = true;
  double sum = 0;
  for (std::uint32_t i = 0; i < runs; ++i) {
    const TestOutcome t = fortified_test(g, lambda, cfg, rng.split(kCalibrationLabel, i));
    sum += static_cast<double>(t.steps);
    out.max_steps = std::max(out.max_steps, t.steps);
  }
  if (runs > 0) out.mean_steps = sum / runs;
  out.beta_observed = static_cast<double>(out.max_steps) * lambda / n;
  return out;
}

}  // namespace arbest
