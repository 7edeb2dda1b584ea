// Copyright 2026 The domset Authors
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

#include "domset/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace domset {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> deg(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }

  // Sort and dedup each row, then compact.
  std::vector<std::size_t> offsets(n + 1, 0);
  std::size_t out = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    offsets[v] = out;
    for (auto it = first; it != last; ++it) g.adjacency_[out++] = *it;
  }
  offsets[n] = out;
  g.adjacency_.resize(out);
  g.offsets_ = std::move(offsets);
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::port_of(VertexId u, VertexId v) const {
  auto row = neighbors(u);
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return row.size();
  return static_cast<std::size_t>(it - row.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const VertexId> vertices) const {
  std::vector<VertexId> relabel(num_vertices(), static_cast<VertexId>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) relabel[vertices[i]] = static_cast<VertexId>(i);
  std::vector<Edge> sub;
  for (VertexId u : vertices) {
    for (VertexId v : neighbors(u)) {
      if (relabel[v] != static_cast<VertexId>(-1) && u < v) sub.emplace_back(relabel[u], relabel[v]);
    }
  }
  return from_edges(vertices.size(), sub);
}

namespace {

bool skippable(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Parses exactly two unsigned integers separated by whitespace.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  const char* p = line.data();
  const char* end = p + line.size();
  auto skip_ws = [&] {
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  };
  skip_ws();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip_ws();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  p = r2.ptr;
  skip_ws();
  return p == end;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError(lineno, have_header ? "expected \"u v\"" : "expected \"n m\" header");
    }
    if (!have_header) {
      if (a > UINT32_MAX) throw ParseError(lineno, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 26)));
      continue;
    }
    if (edges.size() == m) throw ParseError(lineno, "more edge lines than declared m=" + std::to_string(m));
    if (a >= n || b >= n) throw ParseError(lineno, "vertex id out of range");
    if (a == b) throw ParseError(lineno, "self-loop");
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  // End-of-input errors point at the line where more content was expected.
  if (!have_header) throw ParseError(lineno + 1, "missing \"n m\" header");
  if (edges.size() != m) {
    throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> comps;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    auto& comp = comps.back();
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

}  // namespace domset
