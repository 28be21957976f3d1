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
#include <memory>
#include <optional>
#include <vector>

#include "arbest/graph.hpp"
#include "arbest/rng.hpp"
#include "arbest/scheduler.hpp"

// Recursive peeling processes stepped one unit at a time.
//
// A ProcessNode runs lanes of SampleNodes under a StaggerScheduler. A
// SampleNode draws a neighbor sample of its vertex and then runs a child
// ProcessNode on every sampled neighbor, one after another. The fortified
// process F(v) and the warm-up try-to-peel(v) differ only in the policy:
// sampling probability, replicas per lane, termination rule and lane cap.
//
// Every unit step is charged exactly once, at the SampleNode that spends it
// on materializing its sample. A step given to a process lands in one of
// its replicas; a step given to a materialized sample is forwarded to the
// current child process.

namespace arbest {

struct PeelPolicy {
  double sample_probability = 1.0;
  SchedulePolicy schedule;

  /// F(v): 2t-1 replicas per batch, majority rule, p = 1/(25 lambda).
  static PeelPolicy fortified(double lambda, Pacing pacing = Pacing::staggered);
  /// try-to-peel(v): one replica per lane, any-replica rule, L lanes,
  /// p = 1/(10 lambda).
  static PeelPolicy warmup(double lambda, std::uint32_t lanes,
                           Pacing pacing = Pacing::staggered);
};

/// Independent instrumentation of where steps went.
struct EngineTally {
  std::uint64_t materialization_steps = 0;
  std::uint64_t forwarded_steps = 0;
  std::uint64_t process_steps = 0;  // steps received by any process node
  std::uint64_t sample_nodes = 0;
  std::uint64_t process_nodes = 0;
};

struct PeelContext {
  const GraphOracle* oracle = nullptr;
  const PeelPolicy* policy = nullptr;
  EngineTally* tally = nullptr;  // optional
};

class ProcessNode;

/// One sampling procedure: H(v) in the fortified process, H_t(v) in
/// try-to-peel. The first 1 + |sample| steps are a degree query plus one
/// neighbor query per sampled index.
class SampleNode {
 public:
  SampleNode(Vertex v, RngStream rng);
  ~SampleNode();
  SampleNode(SampleNode&&) noexcept;
  SampleNode& operator=(SampleNode&&) noexcept;

  /// One unit step. Returns true once terminated. Must not be called again
  /// after it has thrown BudgetExhausted.
  bool step(PeelContext& ctx);

  Vertex vertex() const noexcept { return v_; }
  bool materialized() const noexcept { return drawn_ && fetched_ == sample_size_; }
  bool terminated() const noexcept { return terminated_; }
  /// Sampled neighbors fetched so far, in sampled order. Released once the
  /// node terminates.
  std::vector<Vertex> sample() const;
  /// Number of sampled neighbors, known after the first step.
  std::size_t sample_size() const noexcept { return sample_size_; }
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  void finish();

  Vertex v_;
  bool drawn_ = false;
  bool terminated_ = false;
  std::uint32_t sample_size_ = 0;
  std::uint32_t fetched_ = 0;
  std::uint32_t cursor_ = 0;
  RngStream rng_;
  std::uint64_t steps_ = 0;
  // Sampled indices; entries below fetched_ already hold the neighbor id.
  std::vector<std::uint64_t> slots_;
  std::unique_ptr<ProcessNode> child_;
};

/// F(v) or try-to-peel(v).
class ProcessNode {
 public:
  ProcessNode(Vertex v, RngStream rng, const PeelPolicy& policy);

  bool step(PeelContext& ctx);

  Vertex vertex() const noexcept { return v_; }
  bool terminated() const noexcept { return scheduler_.terminated(); }
  std::uint32_t terminating_lane() const noexcept { return scheduler_.terminating_lane(); }
  std::uint64_t counter() const noexcept { return scheduler_.counter(); }
  std::uint64_t steps() const noexcept { return steps_; }
  const StaggerScheduler<SampleNode>& scheduler() const noexcept { return scheduler_; }

 private:
  Vertex v_;
  RngStream rng_;
  StaggerScheduler<SampleNode> scheduler_;
  std::uint64_t steps_ = 0;
};

struct ProcessOutcome {
  bool terminated = false;
  std::uint64_t steps = 0;           // steps charged by this run
  std::uint64_t counter = 0;         // root scheduler value at the end
  std::uint32_t terminating_lane = 0;
};

/// Steps a fresh process on v until it terminates or the counter's budget
/// runs out. `max_steps`, when set, is an extra local cap that also ends the
/// run without termination.
ProcessOutcome run_process(const GraphOracle& oracle, Vertex v, const PeelPolicy& policy,
                           const RngStream& rng, EngineTally* tally = nullptr,
                           std::optional<std::uint64_t> max_steps = std::nullopt);

/// H(v) materialized: the returned node has spent 1 + |sample| steps.
std::unique_ptr<SampleNode> spawn_single_shot(const GraphOracle& oracle, Vertex v,
                                              const PeelPolicy& policy, const RngStream& rng,
                                              EngineTally* tally = nullptr);

/// Runs a standalone H(v) to termination, or until the budget runs out.
ProcessOutcome run_single_shot(const GraphOracle& oracle, Vertex v, const PeelPolicy& policy,
                               const RngStream& rng, EngineTally* tally = nullptr);

}  // namespace arbest
