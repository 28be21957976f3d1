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

#include "arbest/baselines.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "arbest/errors.hpp"

namespace arbest {

DegeneracyResult matula_beck(const StaticGraph& g) {
  const Vertex n = g.num_vertices();
  DegeneracyResult out;
  out.order.reserve(n);
  if (n == 0) return out;

  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  // Ordered buckets give the smallest-id tie rule.
  std::vector<std::set<Vertex>> bucket(static_cast<std::size_t>(max_deg) + 1);
  for (Vertex v = 0; v < n; ++v) bucket[deg[v]].insert(v);

  std::vector<char> removed(n, 0);
  std::uint32_t low = 0;
  for (Vertex step = 0; step < n; ++step) {
    while (bucket[low].empty()) ++low;
    const Vertex v = *bucket[low].begin();
    bucket[low].erase(bucket[low].begin());
    removed[v] = 1;
    out.order.push_back(v);
    out.degeneracy = std::max(out.degeneracy, deg[v]);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      bucket[deg[u]].erase(u);
      --deg[u];
      bucket[deg[u]].insert(u);
    }
    // A neighbor may now sit one bucket below the current minimum.
    if (low > 0) --low;
  }
  return out;
}

std::uint32_t peel_threshold(double lambda) {
  if (!(lambda >= 0.5)) throw std::invalid_argument("peel threshold needs lambda >= 1/2");
  return static_cast<std::uint32_t>(std::floor(2.0 * lambda));
}

PeelSequence threshold_peel(const StaticGraph& g, double lambda, TieBreak tie) {
  const Vertex n = g.num_vertices();
  PeelSequence out;
  out.threshold = peel_threshold(lambda);
  const std::uint32_t tau = out.threshold;

  std::vector<std::uint32_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  // Keys are ids (or complemented ids) so one min-heap serves both rules.
  auto key = [tie](Vertex v) -> Vertex {
    return tie == TieBreak::smallest_id ? v : ~v;
  };
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] <= tau) ready.push(key(v));
  }
  std::vector<char> removed(n, 0);
  while (!ready.empty()) {
    const Vertex v = key(ready.top());
    ready.pop();
    removed[v] = 1;
    out.order.push_back(v);
    out.removal_degrees.push_back(deg[v]);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      // Crossing from tau + 1 to tau is the only moment u becomes ready.
      if (deg[u]-- == tau + 1) ready.push(key(u));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) out.core.push_back(v);
  }
  return out;
}

namespace {

void check_brute_force_size(const StaticGraph& g) {
  if (g.num_vertices() > kBruteForceMaxVertices) {
    throw SizeLimitError("brute force limited to " + std::to_string(kBruteForceMaxVertices) +
                         " vertices, got " + std::to_string(g.num_vertices()));
  }
}

// edges[S] = |E(S)| for every vertex subset S, built from S minus its lowest
// vertex in O(1) per subset.
std::vector<std::uint16_t> induced_edge_counts(const StaticGraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::uint32_t> mask(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) mask[v] |= 1u << u;
  }
  std::vector<std::uint16_t> edges(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    edges[s] = static_cast<std::uint16_t>(edges[rest] + std::popcount(mask[v] & rest));
  }
  return edges;
}

}  // namespace

std::uint32_t brute_force_arboricity(const StaticGraph& g) {
  check_brute_force_size(g);
  const Vertex n = g.num_vertices();
  if (n < 2) return 0;
  const auto edges = induced_edge_counts(g);
  std::uint32_t best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const auto size = static_cast<std::uint32_t>(std::popcount(s));
    if (size < 2) continue;
    const std::uint32_t e = edges[s];
    best = std::max(best, (e + size - 2) / (size - 1));
  }
  return best;
}

Rational brute_force_density(const StaticGraph& g) {
  check_brute_force_size(g);
  const Vertex n = g.num_vertices();
  Rational best{0, 1};
  if (n == 0) return best;
  const auto edges = induced_edge_counts(g);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const Rational r{edges[s], static_cast<std::uint64_t>(std::popcount(s))};
    if (r > best) best = r;
  }
  const std::uint64_t d = std::gcd(best.num, best.den);
  if (d > 1) best = {best.num / d, best.den / d};
  if (best.num == 0) best.den = 1;
  return best;
}

TVector t_recursion(const StaticGraph& g, double lambda, double c) {
  const PeelSequence peel = threshold_peel(g, lambda);
  if (!peel.core.empty()) {
    throw NotPeelableError("threshold peel at lambda=" + std::to_string(lambda) + " left " +
                           std::to_string(peel.core.size()) + " core vertices");
  }
  const Vertex n = g.num_vertices();
  TVector out;
  out.lambda = lambda;
  out.c = c;
  out.order = peel.order;
  out.values.assign(n, 0.0);

  std::vector<std::uint32_t> position(n);
  for (std::uint32_t i = 0; i < n; ++i) position[peel.order[i]] = i;

  const double carry = 2.0 / (5.0 * lambda);
  double sum = 0.0, comp = 0.0;  // Neumaier summation
  for (std::uint32_t i = 0; i < n; ++i) {
    const Vertex x = peel.order[i];
    double earlier = 0.0;
    for (Vertex u : g.neighbors(x)) {
      if (position[u] < i) earlier += out.values[position[u]];
    }
    const double t = carry * earlier + 10.0 * c * g.degree(x) / lambda;
    out.values[i] = t;
    const double s = sum + t;
    comp += std::abs(sum) >= std::abs(t) ? (sum - s) + t : (t - s) + sum;
    sum = s;
  }
  out.total = sum + comp;
  return out;
}

}  // namespace arbest
