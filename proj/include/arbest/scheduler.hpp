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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arbest/errors.hpp"
#include "arbest/graph.hpp"

// Staggered execution of lanes of steppable replicas.
//
// On counter value y the active lanes are 1 .. trailing_zeros(y) + 1, so
// lane t is activated once per 2^(t-1) increments. Every non-terminated
// replica of an active lane takes one step per activation. Termination is
// evaluated when a tick completes; the smallest satisfying lane wins.
//
// A replica step is driven through step_one(), which performs exactly one
// replica step and remembers where in the tick it stopped. Nested processes
// rely on this: one step of a parent replica is one step of its child.

namespace arbest {

/// Number of trailing zero bits of y. Throws std::invalid_argument on 0.
inline std::uint32_t trailing_zeros(std::uint64_t y) {
  if (y == 0) throw std::invalid_argument("trailing_zeros(0) is undefined");
  return static_cast<std::uint32_t>(std::countr_zero(y));
}

/// Lanes stepped on counter value y: [1 .. trailing_zeros(y) + 1].
std::vector<std::uint32_t> active_lanes(std::uint64_t y);

enum class TerminationRule { any_replica, majority_of_replicas };
enum class Pacing { staggered, naive };
enum class ReplicaLayout { single, odd_growing };  // 1 vs 2t-1 replicas

struct SchedulePolicy {
  TerminationRule rule = TerminationRule::majority_of_replicas;
  Pacing pacing = Pacing::staggered;
  ReplicaLayout layout = ReplicaLayout::odd_growing;
  std::uint32_t max_lanes = 0;  // 0: unbounded

  std::uint32_t replicas_in_lane(std::uint32_t t) const {
    return layout == ReplicaLayout::single ? 1 : 2 * t - 1;
  }
  bool satisfied(std::uint32_t terminated, std::uint32_t size) const {
    return rule == TerminationRule::any_replica ? terminated >= 1 : 2 * terminated > size;
  }
};

struct AdvanceStatus {
  enum class Kind { running, terminated, budget_exhausted };
  Kind kind = Kind::running;
  std::uint32_t lane = 0;  // terminating lane, 1-based
  std::uint64_t y = 0;     // counter value at termination
};

/// Replicas are stored by value. Stepping is supplied by the caller as
/// `bool step(Replica&)` returning true once that replica has terminated,
/// after which `replica.terminated()` must stay true. Spawning is
/// `Replica spawn(lane, index)`.
template <class Replica>
class StaggerScheduler {
 public:
  struct Lane {
    std::vector<Replica> replicas;
    std::uint32_t size = 0;
    std::uint32_t terminated_count = 0;
    std::uint64_t activations = 0;
  };

  explicit StaggerScheduler(const SchedulePolicy& policy) : policy_(&policy) {}

  std::uint64_t counter() const noexcept { return y_; }
  bool terminated() const noexcept { return terminated_; }
  std::uint32_t terminating_lane() const noexcept { return terminating_lane_; }
  const std::vector<Lane>& lanes() const noexcept { return lanes_; }
  bool mid_tick() const noexcept { return in_tick_; }

  /// Performs exactly one replica step. Returns true once terminated.
  template <class Spawn, class Step>
  bool step_one(Spawn&& spawn, Step&& step) {
    if (terminated_) return true;
    bool fresh_tick = false;
    for (;;) {
      if (!in_tick_) {
        begin_tick(spawn);
        fresh_tick = true;
      }
      while (lane_cursor_ < active_) {
        Lane& lane = lanes_[lane_cursor_];
        while (replica_cursor_ < lane.replicas.size()) {
          Replica& replica = lane.replicas[replica_cursor_++];
          if (replica.terminated()) continue;
          if (step(replica)) ++lane.terminated_count;
          if (tick_finished()) finish_tick();
          return terminated_;
        }
        ++lane_cursor_;
        replica_cursor_ = 0;
      }
      // Only reachable if a whole tick had nothing left to step.
      if (fresh_tick) throw std::logic_error("scheduler tick with no runnable replica");
      finish_tick();
      if (terminated_) return true;
    }
  }

  /// Completes one full tick: increments y, steps every active replica
  /// once, evaluates termination. Stops early with budget_exhausted when
  /// `sink` cannot take another charge.
  template <class Spawn, class Step>
  AdvanceStatus advance(const QueryCounter& sink, Spawn&& spawn, Step&& step) {
    if (terminated_) return status();
    if (sink.at_budget()) return {AdvanceStatus::Kind::budget_exhausted, 0, y_};
    try {
      do {
        step_one(spawn, step);
      } while (in_tick_ && !terminated_);
    } catch (const BudgetExhausted&) {
      return {AdvanceStatus::Kind::budget_exhausted, 0, y_};
    }
    return status();
  }

  AdvanceStatus status() const {
    if (terminated_) return {AdvanceStatus::Kind::terminated, terminating_lane_, y_};
    return {AdvanceStatus::Kind::running, 0, y_};
  }

 private:
  std::uint32_t lanes_for(std::uint64_t y) const {
    const std::uint32_t staggered = trailing_zeros(y) + 1;
    if (policy_->pacing == Pacing::naive) {
      if (policy_->max_lanes > 0) return policy_->max_lanes;
      return std::max<std::uint32_t>(static_cast<std::uint32_t>(lanes_.size()), staggered);
    }
    return policy_->max_lanes > 0 ? std::min(policy_->max_lanes, staggered) : staggered;
  }

  template <class Spawn>
  void begin_tick(Spawn& spawn) {
    ++y_;
    active_ = lanes_for(y_);
    if (lanes_.capacity() == 0) lanes_.reserve(8);
    while (lanes_.size() < active_) {
      const auto t = static_cast<std::uint32_t>(lanes_.size() + 1);
      Lane lane;
      const std::uint32_t count = policy_->replicas_in_lane(t);
      lane.size = count;
      lane.replicas.reserve(count);
      for (std::uint32_t r = 0; r < count; ++r) lane.replicas.push_back(spawn(t, r));
      lanes_.push_back(std::move(lane));
    }
    for (std::uint32_t t = 0; t < active_; ++t) ++lanes_[t].activations;
    lane_cursor_ = 0;
    replica_cursor_ = 0;
    in_tick_ = true;
  }

  // True when no runnable replica remains in the current tick.
  bool tick_finished() {
    while (lane_cursor_ < active_) {
      const Lane& lane = lanes_[lane_cursor_];
      while (replica_cursor_ < lane.replicas.size()) {
        if (!lane.replicas[replica_cursor_].terminated()) return false;
        ++replica_cursor_;
      }
      ++lane_cursor_;
      replica_cursor_ = 0;
    }
    return true;
  }

  void finish_tick() {
    in_tick_ = false;
    for (std::uint32_t t = 0; t < active_; ++t) {
      const Lane& lane = lanes_[t];
      if (policy_->satisfied(lane.terminated_count, lane.size)) {
        terminated_ = true;
        terminating_lane_ = t + 1;
        // Abandon every remaining replica; counters stay readable.
        for (Lane& l : lanes_) {
          l.replicas.clear();
          l.replicas.shrink_to_fit();
        }
        return;
      }
    }
  }

  const SchedulePolicy* policy_;
  std::vector<Lane> lanes_;
  std::uint64_t y_ = 0;
  std::uint32_t active_ = 0;
  std::uint32_t lane_cursor_ = 0;
  std::uint32_t replica_cursor_ = 0;
  std::uint32_t terminating_lane_ = 0;
  bool in_tick_ = false;
  bool terminated_ = false;
};

}  // namespace arbest
