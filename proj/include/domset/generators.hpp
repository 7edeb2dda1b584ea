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
#include <stdexcept>
#include <string>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Uniform random labelled tree on n vertices, decoded from a random Prüfer
/// sequence. n == 0 or 1 gives no edges.
std::vector<Edge> random_tree_edges(std::size_t n, std::uint64_t seed);

/// Union of k independent uniform random trees on the same n vertices,
/// duplicates merged. Arboricity is at most k by construction.
Graph gen_forest_union(std::size_t n, std::size_t k, std::uint64_t seed);

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
/// K_{1,n-1} with center 0.
Graph gen_star(std::size_t n);
Graph gen_grid(std::size_t rows, std::size_t cols);
/// m distinct edges sampled uniformly without replacement.
Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed);
Graph gen_empty(std::size_t n);
Graph gen_complete(std::size_t n);

/// Textual generator spec used by the CLI and the benchmark grid, e.g.
/// "star:6", "grid:3x3", "gnm:50:100", "forest-union:100:3", "path:4".
struct GeneratorSpec {
  std::string kind;
  std::vector<std::size_t> params;

  static GeneratorSpec parse(const std::string& text);
  Graph build(std::uint64_t seed) const;
  std::string to_string() const;
};

}  // namespace domset
