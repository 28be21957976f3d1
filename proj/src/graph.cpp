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

#include "arbest/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "arbest/errors.hpp"

namespace arbest {

StaticGraph StaticGraph::from_edges(Vertex n, std::span<const Edge> edges,
                                    std::size_t first_line) {
  StaticGraph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [u, v] = edges[k];
    if (u >= n || v >= n) {
      throw ParseError(first_line + k, "vertex id out of range [0, " +
                                           std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(first_line + k, "self-loop at vertex " + std::to_string(u));
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adjacency_.resize(2 * edges.size());
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }

  // Duplicate check on a sorted copy of each list; report the later edge.
  std::vector<Vertex> scratch;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    scratch.assign(nb.begin(), nb.end());
    std::sort(scratch.begin(), scratch.end());
    auto dup = std::adjacent_find(scratch.begin(), scratch.end());
    if (dup == scratch.end()) continue;
    const Vertex a = std::min(v, *dup), b = std::max(v, *dup);
    std::size_t seen = 0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto [x, y] = edges[k];
      if (std::min(x, y) == a && std::max(x, y) == b && ++seen == 2) {
        throw ParseError(first_line + k, "duplicate edge " + std::to_string(a) +
                                             " " + std::to_string(b));
      }
    }
  }
  return g;
}

std::vector<Edge> StaticGraph::canonical_edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool skippable(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Parses exactly two unsigned integers separated by whitespace.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  const char* p = line.data();
  const char* end = p + line.size();
  auto skip_ws = [&] {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  };
  skip_ws();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = r1.ptr;
  if (p < end && *p != ' ' && *p != '\t') return false;
  skip_ws();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  p = r2.ptr;
  skip_ws();
  return p == end;
}

}  // namespace

StaticGraph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0, m = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    if (!parse_pair(line, n, m)) throw ParseError(line_no, "expected header \"n m\"");
    if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header \"n m\"");

  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  edges.reserve(m);
  lines.reserve(m);
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    if (edges.size() == m) throw ParseError(line_no, "more than " + std::to_string(m) + " edges");
    std::uint64_t u = 0, v = 0;
    if (!parse_pair(line, u, v)) throw ParseError(line_no, "expected \"u v\"");
    if (u >= n || v >= n) {
      throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    lines.push_back(line_no);
  }
  if (edges.size() != m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  try {
    return StaticGraph::from_edges(static_cast<Vertex>(n), edges, 0);
  } catch (const ParseError& e) {
    // from_edges reports the edge index; translate it to the file line.
    const std::string msg = e.what();
    const auto colon = msg.find(": ");
    throw ParseError(lines[e.line()], msg.substr(colon + 2));
  }
}

StaticGraph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

StaticGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const StaticGraph& g, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.canonical_edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const StaticGraph& g,
                          std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_edge_list(out, g, comment);
  if (!out) throw IoError("write failed: " + path);
}

void QueryCounter::check_open() const {
  if (exhausted_) throw BudgetExhausted();
}

void QueryCounter::charge_step(std::uint64_t count) {
  check_open();
  if (budget_ && count > *budget_ - scheduler_steps_) {
    exhausted_ = true;
    throw BudgetExhausted();
  }
  scheduler_steps_ += count;
}

void QueryCounter::charge_neighbor_query() {
  check_open();
  ++neighbor_queries_;
}

void QueryCounter::charge_degree_query() {
  check_open();
  ++degree_queries_;
}

std::optional<Vertex> GraphOracle::neighbor_query(Vertex v, std::uint64_t i) const {
  counter_->charge_neighbor_query();
  const auto nb = graph_->neighbors(v);
  if (i == 0 || i > nb.size()) return std::nullopt;
  return nb[i - 1];
}

std::uint32_t GraphOracle::degree_query(Vertex v) const {
  counter_->charge_degree_query();
  return graph_->degree(v);
}

std::uint32_t GraphOracle::degree_via_binary_search(Vertex v) const {
  // Largest d in [0, n-1] with neighbor_query(v, d) defined; d = 0 is free.
  std::uint64_t lo = 0;
  std::uint64_t hi = graph_->num_vertices() == 0 ? 0 : graph_->num_vertices() - 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (neighbor_query(v, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return static_cast<std::uint32_t>(lo);
}

}  // namespace arbest
