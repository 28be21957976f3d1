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

#include "arbest/peeling.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "arbest/errors.hpp"
#include "arbest/sampler.hpp"

namespace arbest {

namespace {

constexpr std::uint64_t kChildLabel = 0xC41D;

double neighbor_probability(double lambda, double factor) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  return std::min(1.0, 1.0 / (factor * lambda));
}

}  // namespace

PeelPolicy PeelPolicy::fortified(double lambda, Pacing pacing) {
  PeelPolicy p;
  p.sample_probability = neighbor_probability(lambda, 25.0);
  p.schedule.rule = TerminationRule::majority_of_replicas;
  p.schedule.layout = ReplicaLayout::odd_growing;
  p.schedule.pacing = pacing;
  p.schedule.max_lanes = 0;
  return p;
}

PeelPolicy PeelPolicy::warmup(double lambda, std::uint32_t lanes, Pacing pacing) {
  if (lanes == 0) throw std::invalid_argument("try-to-peel needs at least one lane");
  PeelPolicy p;
  p.sample_probability = neighbor_probability(lambda, 10.0);
  p.schedule.rule = TerminationRule::any_replica;
  p.schedule.layout = ReplicaLayout::single;
  p.schedule.pacing = pacing;
  p.schedule.max_lanes = lanes;
  return p;
}

SampleNode::SampleNode(Vertex v, RngStream rng) : v_(v), rng_(rng) {}
SampleNode::~SampleNode() = default;
SampleNode::SampleNode(SampleNode&&) noexcept = default;
SampleNode& SampleNode::operator=(SampleNode&&) noexcept = default;

std::vector<Vertex> SampleNode::sample() const {
  std::vector<Vertex> out;
  if (terminated_) return out;
  out.reserve(fetched_);
  for (std::uint32_t i = 0; i < fetched_; ++i) out.push_back(static_cast<Vertex>(slots_[i]));
  return out;
}

void SampleNode::finish() {
  terminated_ = true;
  child_.reset();
  slots_ = {};
}

bool SampleNode::step(PeelContext& ctx) {
  if (terminated_) return true;
  const GraphOracle& oracle = *ctx.oracle;
  if (!drawn_ || fetched_ < sample_size_) {
    oracle.counter().charge_step();
    ++steps_;
    if (ctx.tally) ++ctx.tally->materialization_steps;
    if (!drawn_) {
      const std::uint32_t deg = oracle.degree_query(v_);
      slots_ = sample_subset(deg, ctx.policy->sample_probability, rng_);
      sample_size_ = static_cast<std::uint32_t>(slots_.size());
      drawn_ = true;
      if (sample_size_ == 0) finish();
      return terminated_;
    }
    slots_[fetched_] = *oracle.neighbor_query(v_, slots_[fetched_] + 1);
    ++fetched_;
    return false;
  }

  ++steps_;
  if (ctx.tally) ++ctx.tally->forwarded_steps;
  if (!child_) {
    child_ = std::make_unique<ProcessNode>(static_cast<Vertex>(slots_[cursor_]),
                                           rng_.split(kChildLabel, cursor_), *ctx.policy);
    if (ctx.tally) ++ctx.tally->process_nodes;
  }
  if (child_->step(ctx)) {
    child_.reset();
    if (++cursor_ == sample_size_) finish();
  }
  return terminated_;
}

ProcessNode::ProcessNode(Vertex v, RngStream rng, const PeelPolicy& policy)
    : v_(v), rng_(rng), scheduler_(policy.schedule) {}

bool ProcessNode::step(PeelContext& ctx) {
  ++steps_;
  if (ctx.tally) ++ctx.tally->process_steps;
  auto spawn = [&](std::uint32_t lane, std::uint32_t replica) {
    if (ctx.tally) ++ctx.tally->sample_nodes;
    return SampleNode(v_, rng_.split(lane, replica));
  };
  auto step = [&](SampleNode& s) { return s.step(ctx); };
  return scheduler_.step_one(spawn, step);
}

ProcessOutcome run_process(const GraphOracle& oracle, Vertex v, const PeelPolicy& policy,
                           const RngStream& rng, EngineTally* tally,
                           std::optional<std::uint64_t> max_steps) {
  QueryCounter& counter = oracle.counter();
  const std::uint64_t start = counter.scheduler_steps();
  ProcessNode root(v, rng, policy);
  if (tally) ++tally->process_nodes;
  PeelContext ctx{&oracle, &policy, tally};
  try {
    while (!root.step(ctx)) {
      if (max_steps && root.steps() >= *max_steps) break;
    }
  } catch (const BudgetExhausted&) {
  }
  ProcessOutcome out;
  out.terminated = root.terminated();
  out.steps = counter.scheduler_steps() - start;
  out.counter = root.counter();
  out.terminating_lane = root.terminating_lane();
  return out;
}

std::unique_ptr<SampleNode> spawn_single_shot(const GraphOracle& oracle, Vertex v,
                                              const PeelPolicy& policy, const RngStream& rng,
                                              EngineTally* tally) {
  auto node = std::make_unique<SampleNode>(v, rng);
  if (tally) ++tally->sample_nodes;
  PeelContext ctx{&oracle, &policy, tally};
  while (!node->terminated() && !node->materialized()) node->step(ctx);
  return node;
}

ProcessOutcome run_single_shot(const GraphOracle& oracle, Vertex v, const PeelPolicy& policy,
                               const RngStream& rng, EngineTally* tally) {
  QueryCounter& counter = oracle.counter();
  const std::uint64_t start = counter.scheduler_steps();
  ProcessOutcome out;
  try {
    auto node = spawn_single_shot(oracle, v, policy, rng, tally);
    PeelContext ctx{&oracle, &policy, tally};
    while (!node->step(ctx)) {
    }
    out.terminated = true;
  } catch (const BudgetExhausted&) {
  }
  out.steps = counter.scheduler_steps() - start;
  return out;
}

}  // namespace arbest
