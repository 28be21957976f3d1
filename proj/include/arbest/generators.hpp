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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbest/graph.hpp"
#include "arbest/rng.hpp"

// Synthetic graph families. Every generator builds its graph from the
// canonically sorted edge list, so a saved and reloaded graph answers every
// neighbor query identically.

namespace arbest {

enum class Family { planted_core, layered, uniform, forest, clique_union };

std::string_view family_name(Family f);
/// Throws std::invalid_argument on an unknown name.
Family parse_family(std::string_view name);

struct GenSpec {
  Family family = Family::forest;
  Vertex n = 0;
  std::uint32_t lambda = 1;
  std::uint32_t d_mult = 120;  // planted-core clique degree multiplier
  std::uint32_t fan = 4;       // layered shrink factor
  std::uint64_t m = 0;         // uniform edge count
  std::uint64_t seed = 1;
};

/// "family=... n=... seed=..." as written in the edge-list comment line.
std::string describe(const GenSpec& spec);
/// Short identifier for result rows.
std::string graph_id(const GenSpec& spec);

/// K_{d_mult * lambda + 1} on random labels plus a random tree on the rest.
StaticGraph gen_planted_core(Vertex n, std::uint32_t lambda, std::uint32_t d_mult,
                             RngStream& rng);

/// Layer sizes for gen_layered: round(n (fan-1) / fan^i) while at least
/// lambda, the last layer absorbing the remainder.
std::vector<Vertex> layer_sizes(Vertex n, std::uint32_t lambda, std::uint32_t fan);

/// Every vertex of layer i gets lambda neighbors in layer i+1, spread
/// round-robin so layer i+1 vertices receive about fan * lambda each.
StaticGraph gen_layered(Vertex n, std::uint32_t lambda, std::uint32_t fan, RngStream& rng);

/// Uniform simple graph with exactly m edges.
StaticGraph gen_uniform(Vertex n, std::uint64_t m, RngStream& rng);

/// Random recursive tree on shuffled labels.
StaticGraph gen_forest(Vertex n, RngStream& rng);

/// Disjoint K_{2 lambda + 1} blocks; leftover vertices form a random tree.
StaticGraph gen_clique_union(Vertex n, std::uint32_t lambda, RngStream& rng);

StaticGraph generate(const GenSpec& spec);

/// Arboricity when known exactly, otherwise degeneracy bounds.
struct LambdaTruth {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  bool exact() const noexcept { return lower == upper; }
};

LambdaTruth lambda_truth(const GenSpec& spec, const StaticGraph& g);

/// Structural post-checks of a generated graph. Returns an empty string
/// when the family property holds, else a description of the violation.
std::string check_structure(const GenSpec& spec, const StaticGraph& g);

}  // namespace arbest
