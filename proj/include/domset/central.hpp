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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

/// Raised when a maintained partition invariant fails. Indicates a bug, or
/// an alpha override too small for the graph.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DominatingSetResult {
  std::vector<VertexId> dset;     // sorted
  std::vector<VertexId> active;   // in selection order
  std::vector<VertexId> passive;  // in saturation order
  std::uint64_t scan_ops = 0;
  std::size_t alpha_hat = 0;
  std::size_t threshold = 0;
  std::size_t iterations = 0;
  /// Largest counter value reached by any vertex.
  std::size_t max_counter = 0;
  /// Largest |N(w) ∩ (W ∪ B_high)| over the chosen w, read when w was picked.
  std::size_t max_pick_degree = 0;
};

struct CentralOptions {
  std::size_t alpha_hat = 1;
  std::size_t delta = 2;
  /// Recount the whole partition from scratch after every outer iteration
  /// and check it against the maintained state. O(n + m) per iteration.
  bool debug_invariants = false;
};

/// Work bound: scan_ops <= kScanOpsPerElement * (n + m) on every input.
/// Each vertex is pushed on the W_low stack at most once, each of the
/// three per-vertex events (leaves W, leaves W ∪ B_high, enters D) scans
/// N(v) once, and the chosen vertices' induced rows sum to at most 2m.
inline constexpr std::uint64_t kScanOpsPerElement = 10;

/// Linear-time O(alpha) approximation. Throws std::invalid_argument if
/// alpha_hat == 0, delta == 0, or delta * alpha_hat is below the graph's
/// degeneracy (W_low could then run dry).
DominatingSetResult solve_central(const Graph& g, const CentralOptions& options);
DominatingSetResult solve_central(const Graph& g, std::size_t alpha_hat);

/// Classic greedy: repeatedly take the vertex covering the most undominated
/// vertices of its closed neighbourhood, lowest id on ties.
DominatingSetResult solve_greedy(const Graph& g);

struct Coverage {
  bool dominating = false;
  std::optional<VertexId> first_uncovered;
};

Coverage validate_dominating(const Graph& g, std::span<const VertexId> set);

/// Structural checks on a finished solve_central run: active/passive are
/// disjoint and make up dset, every passive vertex has >= threshold active
/// neighbours, every active vertex has <= threshold passive neighbours.
/// Returns one message per failed check.
std::vector<std::string> audit_central(const Graph& g, const DominatingSetResult& r);

}  // namespace domset
