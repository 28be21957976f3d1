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

#include <compare>
#include <cstdint>
#include <vector>

#include "arbest/graph.hpp"

// Full-knowledge reference algorithms. These read the adjacency arrays
// directly and are used for ground truth, budget calibration and tests.

namespace arbest {

struct DegeneracyResult {
  std::uint32_t degeneracy = 0;
  std::vector<Vertex> order;  // removal order
};

/// Repeated removal of a minimum-degree vertex (smallest id on ties) using
/// a bucket queue indexed by residual degree.
DegeneracyResult matula_beck(const StaticGraph& g);

enum class TieBreak { smallest_id, largest_id };

/// Integer peeling threshold floor(2 * lambda).
std::uint32_t peel_threshold(double lambda);

struct PeelSequence {
  std::uint32_t threshold = 0;
  std::vector<Vertex> order;                   // x_1 .. x_k
  std::vector<std::uint32_t> removal_degrees;  // residual degree at removal
  std::vector<Vertex> core;                    // sorted survivors
};

/// Removes vertices of residual degree <= floor(2 * lambda) until none is
/// left. Requires lambda >= 1/2.
PeelSequence threshold_peel(const StaticGraph& g, double lambda,
                            TieBreak tie = TieBreak::smallest_id);

inline constexpr Vertex kBruteForceMaxVertices = 22;

/// max over |S| >= 2 of ceil(|E(S)| / (|S| - 1)). Throws SizeLimitError for
/// n > kBruteForceMaxVertices.
std::uint32_t brute_force_arboricity(const StaticGraph& g);

/// Nonnegative fraction kept in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// max over nonempty S of |E(S)| / |S|. Same size limit as above.
Rational brute_force_density(const StaticGraph& g);

/// Per-vertex cost bound along the peel order and its sum S.
struct TVector {
  double lambda = 0;
  double c = 0;
  std::vector<Vertex> order;
  std::vector<double> values;  // values[i] = T(order[i])
  double total = 0;            // compensated sum of values
};

/// T(x_i) = 2/(5 lambda) * sum over earlier neighbors x_j of T(x_j)
///        + 10 c deg(x_i) / lambda,
/// along threshold_peel's order. Throws NotPeelableError if the peel leaves
/// a core.
TVector t_recursion(const StaticGraph& g, double lambda, double c = 1.0);

}  // namespace arbest
