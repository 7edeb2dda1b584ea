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

#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domset {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph in CSR form. Vertices are 0..n-1 and
/// every adjacency row is sorted ascending.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds from an arbitrary edge list. Duplicate edges (in either
  /// orientation) are merged; self-loops and out-of-range ids throw
  /// std::invalid_argument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  /// Index of neighbors(v)[0] in the flat adjacency array; slot ids in
  /// [row_offset(v), row_offset(v + 1)) name v's half-edges.
  std::size_t row_offset(VertexId v) const { return offsets_[v]; }
  std::size_t num_half_edges() const { return adjacency_.size(); }
  VertexId half_edge_target(std::size_t slot) const { return adjacency_[slot]; }
  std::size_t max_degree() const;

  bool has_edge(VertexId u, VertexId v) const;

  /// Position of `v` inside neighbors(u), or degree(u) if absent.
  std::size_t port_of(VertexId u, VertexId v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices` (relabelled densely in the given order).
  Graph induced(std::span<const VertexId> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the "n m" header followed by m "u v" lines. Lines whose first
/// non-blank character is '#' and blank lines are skipped.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Writes the same format with edges sorted, u < v on each line.
std::string write_edge_list(const Graph& g);

/// Connected components as vertex lists, each sorted, ordered by smallest id.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

}  // namespace domset
