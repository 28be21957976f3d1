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

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "arbest/graph.hpp"
#include "arbest/rng.hpp"

namespace testing {

using arbest::Edge;
using arbest::StaticGraph;
using arbest::Vertex;

inline StaticGraph make_graph(Vertex n, const std::vector<Edge>& edges) {
  return StaticGraph::from_edges(n, edges);
}

inline StaticGraph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make_graph(n, e);
}

inline StaticGraph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return make_graph(n, e);
}

inline StaticGraph complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, e);
}

inline StaticGraph star(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return make_graph(leaves + 1, e);
}

// G(n, q) with every pair kept independently.
inline StaticGraph erdos_renyi(Vertex n, double q, arbest::RngStream& rng) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.next_double() < q) e.emplace_back(u, v);
  return make_graph(n, e);
}

// Half-width of a 3 sigma binomial band.
inline double three_sigma(double p, double trials) {
  return 3.0 * std::sqrt(p * (1.0 - p) / trials);
}

}  // namespace testing
