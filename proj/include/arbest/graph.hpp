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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arbest {

/// Vertex ids are 0-based. Edge-list files use the same numbering.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph in adjacency-array form.
///
/// The neighbor order of every vertex is the order in which its edges were
/// supplied. Full-knowledge code (baselines, generators, writers) may read
/// the adjacency directly; the sublinear estimators only see a GraphOracle.
class StaticGraph {
 public:
  StaticGraph() = default;

  /// Validates ids, self-loops and duplicates. On failure throws ParseError
  /// whose line number is `first_line + index of the offending edge`.
  static StaticGraph from_edges(Vertex n, std::span<const Edge> edges,
                                std::size_t first_line = 1);

  Vertex num_vertices() const noexcept { return n_; }
  std::uint64_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::uint32_t degree(Vertex v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  /// Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> canonical_edges() const;

 private:
  Vertex n_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Reads "n m" followed by m lines "u v". Blank lines and lines starting
/// with '#' are skipped.
StaticGraph load_edge_list(std::istream& in);
StaticGraph load_edge_list(std::string_view text);
StaticGraph load_edge_list_file(const std::string& path);

/// Writes canonical edge order, preceded by "# <comment>" when non-empty.
void write_edge_list(std::ostream& out, const StaticGraph& g,
                     std::string_view comment = {});
void write_edge_list_file(const std::string& path, const StaticGraph& g,
                          std::string_view comment = {});

/// Tally of oracle calls and process steps for one test.
///
/// Only scheduler steps count against the budget. Once a charge would
/// overrun it, the counter is marked exhausted and every later charge or
/// query throws BudgetExhausted without changing any count.
class QueryCounter {
 public:
  QueryCounter() = default;
  explicit QueryCounter(std::optional<std::uint64_t> step_budget)
      : budget_(step_budget) {}

  std::uint64_t neighbor_queries() const noexcept { return neighbor_queries_; }
  std::uint64_t degree_queries() const noexcept { return degree_queries_; }
  std::uint64_t scheduler_steps() const noexcept { return scheduler_steps_; }
  std::uint64_t total_queries() const noexcept {
    return neighbor_queries_ + degree_queries_;
  }
  std::optional<std::uint64_t> budget() const noexcept { return budget_; }
  bool exhausted() const noexcept { return exhausted_; }

  /// True when no further step can be charged.
  bool at_budget() const noexcept {
    return exhausted_ || (budget_ && scheduler_steps_ >= *budget_);
  }

  void charge_step(std::uint64_t count = 1);
  void charge_neighbor_query();
  void charge_degree_query();

 private:
  void check_open() const;

  std::uint64_t neighbor_queries_ = 0;
  std::uint64_t degree_queries_ = 0;
  std::uint64_t scheduler_steps_ = 0;
  std::optional<std::uint64_t> budget_;
  bool exhausted_ = false;
};

/// Incidence-list query access to a graph, charging every call.
class GraphOracle {
 public:
  GraphOracle(const StaticGraph& g, QueryCounter& counter) noexcept
      : graph_(&g), counter_(&counter) {}

  Vertex num_vertices() const noexcept { return graph_->num_vertices(); }
  QueryCounter& counter() const noexcept { return *counter_; }

  /// The i-th (1-based) neighbor of v, or nullopt when deg(v) < i.
  std::optional<Vertex> neighbor_query(Vertex v, std::uint64_t i) const;
  std::uint32_t degree_query(Vertex v) const;

  /// deg(v) found with at most ceil(log2 n) + 1 neighbor queries and no
  /// degree query.
  std::uint32_t degree_via_binary_search(Vertex v) const;

 private:
  const StaticGraph* graph_;
  QueryCounter* counter_;
};

}  // namespace arbest
