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

#include "arbest/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "arbest/baselines.hpp"
#include "arbest/errors.hpp"

namespace arbest {

namespace {

std::vector<Vertex> shuffled_labels(Vertex n, RngStream& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (Vertex i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.uniform_below(i)]);
  }
  return perm;
}

Edge ordered(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

void add_tree(std::span<const Vertex> vertices, RngStream& rng, std::vector<Edge>& edges) {
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    edges.push_back(ordered(vertices[i], vertices[rng.uniform_below(i)]));
  }
}

void add_clique(std::span<const Vertex> vertices, std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      edges.push_back(ordered(vertices[i], vertices[j]));
    }
  }
}

StaticGraph from_sorted(Vertex n, std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  return StaticGraph::from_edges(n, edges);
}

std::uint64_t clique_edges(std::uint64_t k) { return k * (k - 1) / 2; }

constexpr std::uint64_t kFamilyLabel = 0x6E4E;

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::planted_core: return "planted-core";
    case Family::layered: return "layered";
    case Family::uniform: return "uniform";
    case Family::forest: return "forest";
    case Family::clique_union: return "clique-union";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::planted_core, Family::layered, Family::uniform, Family::forest,
                   Family::clique_union}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string describe(const GenSpec& spec) {
  std::string s = "family=" + std::string(family_name(spec.family)) +
                  " n=" + std::to_string(spec.n);
  switch (spec.family) {
    case Family::planted_core:
      s += " lambda=" + std::to_string(spec.lambda) + " d_mult=" + std::to_string(spec.d_mult);
      break;
    case Family::layered:
      s += " lambda=" + std::to_string(spec.lambda) + " fan=" + std::to_string(spec.fan);
      break;
    case Family::uniform:
      s += " m=" + std::to_string(spec.m);
      break;
    case Family::clique_union:
      s += " lambda=" + std::to_string(spec.lambda);
      break;
    case Family::forest:
      break;
  }
  return s + " seed=" + std::to_string(spec.seed);
}

std::string graph_id(const GenSpec& spec) {
  std::string s = std::string(family_name(spec.family)) + "-n" + std::to_string(spec.n);
  switch (spec.family) {
    case Family::planted_core:
      s += "-l" + std::to_string(spec.lambda) + "-d" + std::to_string(spec.d_mult);
      break;
    case Family::layered:
      s += "-l" + std::to_string(spec.lambda) + "-f" + std::to_string(spec.fan);
      break;
    case Family::uniform:
      s += "-m" + std::to_string(spec.m);
      break;
    case Family::clique_union:
      s += "-l" + std::to_string(spec.lambda);
      break;
    case Family::forest:
      break;
  }
  return s + "-s" + std::to_string(spec.seed);
}

StaticGraph gen_planted_core(Vertex n, std::uint32_t lambda, std::uint32_t d_mult,
                             RngStream& rng) {
  if (lambda == 0 || d_mult == 0) throw GenerationError("planted-core needs lambda, d_mult >= 1");
  const std::uint64_t k = std::uint64_t{d_mult} * lambda + 1;
  if (k > n) {
    throw GenerationError("planted-core clique of size " + std::to_string(k) +
                          " does not fit in n=" + std::to_string(n));
  }
  const auto perm = shuffled_labels(n, rng);
  std::vector<Edge> edges;
  edges.reserve(clique_edges(k) + n);
  const std::span<const Vertex> all(perm);
  add_clique(all.first(k), edges);
  add_tree(all.subspan(k), rng, edges);
  return from_sorted(n, edges);
}

std::vector<Vertex> layer_sizes(Vertex n, std::uint32_t lambda, std::uint32_t fan) {
  if (fan < 2) throw GenerationError("layered graph needs fan >= 2");
  if (lambda == 0) throw GenerationError("layered graph needs lambda >= 1");
  std::vector<Vertex> sizes;
  std::uint64_t used = 0;
  double shrink = 1.0;
  while (used < n) {
    shrink *= fan;
    auto s = static_cast<std::uint64_t>(std::llround(double(n) * (fan - 1) / shrink));
    s = std::min<std::uint64_t>(s, n - used);
    if (s < lambda) break;
    sizes.push_back(static_cast<Vertex>(s));
    used += s;
  }
  if (sizes.size() < 2) {
    throw GenerationError("layered graph with n=" + std::to_string(n) + ", lambda=" +
                          std::to_string(lambda) + ", fan=" + std::to_string(fan) +
                          " has fewer than two layers of size >= lambda; each vertex needs "
                          "lambda distinct neighbors in the next layer");
  }
  sizes.back() += static_cast<Vertex>(n - used);
  return sizes;
}

StaticGraph gen_layered(Vertex n, std::uint32_t lambda, std::uint32_t fan, RngStream& rng) {
  const auto sizes = layer_sizes(n, lambda, fan);
  const auto perm = shuffled_labels(n, rng);
  std::vector<Edge> edges;
  std::size_t begin = 0;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    const std::size_t next = begin + sizes[i];
    const std::uint64_t upper = sizes[i + 1];
    for (std::uint64_t a = 0; a < sizes[i]; ++a) {
      for (std::uint64_t k = 0; k < lambda; ++k) {
        const std::uint64_t b = (a * lambda + k) % upper;
        edges.push_back(ordered(perm[begin + a], perm[next + b]));
      }
    }
    begin = next;
  }
  return from_sorted(n, edges);
}

StaticGraph gen_uniform(Vertex n, std::uint64_t m, RngStream& rng) {
  const std::uint64_t total = clique_edges(n);
  if (m > total) {
    throw GenerationError("uniform graph with n=" + std::to_string(n) + " has at most " +
                          std::to_string(total) + " edges, asked for " + std::to_string(m));
  }
  // Dense requests pick the missing edges instead.
  const bool complement = m > total / 2;
  const std::uint64_t draws = complement ? total - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(draws * 2);
  while (chosen.size() < draws) {
    const auto u = static_cast<Vertex>(rng.uniform_below(n));
    const auto v = static_cast<Vertex>(rng.uniform_below(n));
    if (u == v) continue;
    const Edge e = ordered(u, v);
    chosen.insert(std::uint64_t{e.first} * n + e.second);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  if (complement) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!chosen.count(std::uint64_t{u} * n + v)) edges.emplace_back(u, v);
      }
    }
  } else {
    for (std::uint64_t key : chosen) {
      edges.emplace_back(static_cast<Vertex>(key / n), static_cast<Vertex>(key % n));
    }
  }
  return from_sorted(n, edges);
}

StaticGraph gen_forest(Vertex n, RngStream& rng) {
  const auto perm = shuffled_labels(n, rng);
  std::vector<Edge> edges;
  edges.reserve(n);
  add_tree(perm, rng, edges);
  return from_sorted(n, edges);
}

StaticGraph gen_clique_union(Vertex n, std::uint32_t lambda, RngStream& rng) {
  if (lambda == 0) throw GenerationError("clique-union needs lambda >= 1");
  const std::uint64_t k = 2 * std::uint64_t{lambda} + 1;
  if (k > n) {
    throw GenerationError("clique-union block K_" + std::to_string(k) +
                          " does not fit in n=" + std::to_string(n));
  }
  const auto perm = shuffled_labels(n, rng);
  const std::span<const Vertex> all(perm);
  const std::uint64_t blocks = n / k;
  std::vector<Edge> edges;
  edges.reserve(blocks * clique_edges(k) + n);
  for (std::uint64_t b = 0; b < blocks; ++b) add_clique(all.subspan(b * k, k), edges);
  add_tree(all.subspan(blocks * k), rng, edges);
  return from_sorted(n, edges);
}

StaticGraph generate(const GenSpec& spec) {
  RngStream rng = RngStream(spec.seed).split(kFamilyLabel, static_cast<std::uint64_t>(spec.family));
  switch (spec.family) {
    case Family::planted_core: return gen_planted_core(spec.n, spec.lambda, spec.d_mult, rng);
    case Family::layered: return gen_layered(spec.n, spec.lambda, spec.fan, rng);
    case Family::uniform: return gen_uniform(spec.n, spec.m, rng);
    case Family::forest: return gen_forest(spec.n, rng);
    case Family::clique_union: return gen_clique_union(spec.n, spec.lambda, rng);
  }
  throw std::invalid_argument("unknown graph family");
}

LambdaTruth lambda_truth(const GenSpec& spec, const StaticGraph& g) {
  if (g.num_vertices() <= kBruteForceMaxVertices) {
    const std::uint32_t a = brute_force_arboricity(g);
    return {a, a};
  }
  switch (spec.family) {
    case Family::forest:
      return {1, 1};
    case Family::planted_core: {
      const std::uint32_t k = spec.d_mult * spec.lambda + 1;
      return {(k + 1) / 2, (k + 1) / 2};
    }
    case Family::clique_union:
      return {spec.lambda + 1, spec.lambda + 1};
    default:
      break;
  }
  const std::uint32_t d = matula_beck(g).degeneracy;
  return {(d + 1) / 2, d};
}

std::string check_structure(const GenSpec& spec, const StaticGraph& g) {
  const Vertex n = g.num_vertices();
  const std::uint64_t m = g.num_edges();
  auto expect_edges = [&](std::uint64_t want) -> std::string {
    if (m == want) return {};
    return "expected " + std::to_string(want) + " edges, found " + std::to_string(m);
  };
  if (n != spec.n) return "expected " + std::to_string(spec.n) + " vertices";
  switch (spec.family) {
    case Family::forest: {
      // Union-find acyclicity.
      std::vector<Vertex> parent(n);
      std::iota(parent.begin(), parent.end(), Vertex{0});
      auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (const auto& [u, v] : g.canonical_edges()) {
        const Vertex a = find(u), b = find(v);
        if (a == b) return "cycle through edge " + std::to_string(u) + "-" + std::to_string(v);
        parent[a] = b;
      }
      return {};
    }
    case Family::planted_core: {
      const std::uint64_t k = std::uint64_t{spec.d_mult} * spec.lambda + 1;
      std::uint64_t heavy = 0;
      for (Vertex v = 0; v < n; ++v) heavy += g.degree(v) >= k - 1;
      if (heavy < k) return "fewer than " + std::to_string(k) + " core-degree vertices";
      return expect_edges(clique_edges(k) + (n > k ? n - k - 1 : 0));
    }
    case Family::clique_union: {
      const std::uint64_t k = 2 * std::uint64_t{spec.lambda} + 1;
      const std::uint64_t rest = n % k;
      return expect_edges((n / k) * clique_edges(k) + (rest > 0 ? rest - 1 : 0));
    }
    case Family::layered: {
      const auto sizes = layer_sizes(n, spec.lambda, spec.fan);
      return expect_edges(std::uint64_t{spec.lambda} * (n - sizes.back()));
    }
    case Family::uniform:
      return expect_edges(spec.m);
  }
  return {};
}

}  // namespace arbest
