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

#include "domset/degeneracy.hpp"

#include <algorithm>

namespace domset {

// Batagelj-Zaversnik: vertices sorted by current degree in one array, with
// bucket start offsets; a degree decrement swaps the vertex to the front of
// its bucket and shifts the boundary.
DegeneracyResult degeneracy_peel(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DegeneracyResult result;
  result.order.reserve(n);
  if (n == 0) return result;

  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    std::size_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<VertexId> vert(n);
  std::vector<std::size_t> pos(n);
  for (VertexId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  std::vector<bool> removed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = vert[i];
    removed[v] = true;
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, deg[v]);
    for (VertexId u : g.neighbors(v)) {
      if (removed[u] || deg[u] <= deg[v]) continue;
      std::size_t du = deg[u];
      std::size_t pu = pos[u];
      std::size_t pw = bin[du];
      VertexId w = vert[pw];
      if (u != w) {
        pos[u] = pw;
        vert[pu] = w;
        pos[w] = pu;
        vert[pw] = u;
      }
      ++bin[du];
      --deg[u];
    }
  }
  result.alpha_hat = std::max<std::size_t>(1, result.degeneracy);
  return result;
}

}  // namespace domset
