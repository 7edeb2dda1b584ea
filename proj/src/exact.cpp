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

#include "domset/exact.hpp"

#include <algorithm>

#include "domset/central.hpp"

namespace domset {
namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, std::uint64_t budget)
      : g_(g), dom_count_(g.num_vertices(), 0), undominated_(g.num_vertices()),
        max_closed_(g.max_degree() + 1), budget_(budget) {
    best_ = solve_greedy(g).dset;
  }

  bool run() {
    recurse();
    return !aborted_;
  }

  const std::vector<VertexId>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void recurse() {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (undominated_ == 0) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    const std::size_t lower = current_.size() + (undominated_ + max_closed_ - 1) / max_closed_;
    if (lower >= best_.size()) return;

    VertexId pick = 0;
    std::size_t pick_size = static_cast<std::size_t>(-1);
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (dom_count_[v] == 0 && g_.degree(v) + 1 < pick_size) {
        pick = v;
        pick_size = g_.degree(v) + 1;
      }
    }

    // Closed neighbourhood of `pick` in ascending order.
    std::vector<VertexId> options;
    options.reserve(pick_size);
    bool placed = false;
    for (VertexId u : g_.neighbors(pick)) {
      if (!placed && pick < u) {
        options.push_back(pick);
        placed = true;
      }
      options.push_back(u);
    }
    if (!placed) options.push_back(pick);

    for (VertexId u : options) {
      take(u);
      recurse();
      untake(u);
      if (aborted_) return;
    }
  }

  void take(VertexId u) {
    current_.push_back(u);
    if (dom_count_[u]++ == 0) --undominated_;
    for (VertexId x : g_.neighbors(u)) {
      if (dom_count_[x]++ == 0) --undominated_;
    }
  }

  void untake(VertexId u) {
    current_.pop_back();
    if (--dom_count_[u] == 0) ++undominated_;
    for (VertexId x : g_.neighbors(u)) {
      if (--dom_count_[x] == 0) ++undominated_;
    }
  }

  const Graph& g_;
  std::vector<std::uint32_t> dom_count_;
  std::size_t undominated_;
  std::size_t max_closed_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
};

}  // namespace

ExactOutcome solve_exact(const Graph& g, std::uint64_t budget) {
  ExactOutcome outcome;
  ExactResult result;
  for (const auto& comp : connected_components(g)) {
    const Graph sub = g.induced(comp);
    BranchAndBound search(sub, budget - std::min(budget, outcome.nodes_explored));
    const bool finished = search.run();
    outcome.nodes_explored += search.nodes();
    if (!finished) return outcome;
    for (VertexId local : search.best()) result.witness.push_back(comp[local]);
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.opt_size = result.witness.size();
  result.nodes_explored = outcome.nodes_explored;
  outcome.result = std::move(result);
  return outcome;
}

}  // namespace domset
