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
#include <optional>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

inline constexpr std::uint64_t kDefaultExactBudget = 10'000'000;

struct ExactResult {
  std::size_t opt_size = 0;
  std::vector<VertexId> witness;  // sorted
  std::uint64_t nodes_explored = 0;
};

struct ExactOutcome {
  std::optional<ExactResult> result;  // empty when the budget ran out
  std::uint64_t nodes_explored = 0;
};

/// Branch and bound for minimum dominating set, solved per connected
/// component. At each node the undominated vertex with the smallest closed
/// neighbourhood is chosen and every member of that neighbourhood is tried
/// as its dominator (ascending id). Pruned by the incumbent and by
/// ceil(undominated / (max_degree + 1)); the incumbent starts from greedy.
/// `budget` caps the total number of search nodes.
ExactOutcome solve_exact(const Graph& g, std::uint64_t budget = kDefaultExactBudget);

}  // namespace domset
