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
#include <vector>

#include "domset/graph.hpp"

namespace domset {

struct DegeneracyResult {
  /// Peeling order (a permutation of the vertex ids).
  std::vector<VertexId> order;
  /// Largest degree seen at removal time.
  std::size_t degeneracy = 0;
  /// Working arboricity bound used by the solvers: max(1, degeneracy).
  std::size_t alpha_hat = 1;
};

/// Bucketed minimum-degree peeling in O(n + m). Within a degree bucket the
/// order is deterministic (buckets are seeded by ascending id).
DegeneracyResult degeneracy_peel(const Graph& g);

}  // namespace domset
