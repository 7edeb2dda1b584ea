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

#include "domset/central.hpp"

#include <algorithm>
#include <queue>

#include "domset/degeneracy.hpp"
#include "domset/partition.hpp"

namespace domset {
namespace {

constexpr std::size_t kNil = static_cast<std::size_t>(-1);

// G[W ∪ B_high] kept as per-vertex doubly linked lists over the CSR
// half-edge slots. twin_[s] is the opposite half-edge, so removing an edge
// from both endpoints is O(1).
class InducedAdjacency {
 public:
  explicit InducedAdjacency(const Graph& g)
      : g_(g),
        next_(g.num_half_edges()),
        prev_(g.num_half_edges()),
        twin_(g.num_half_edges()),
        linked_(g.num_half_edges(), true),
        head_(g.num_vertices(), kNil) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> cursor(n);
    for (VertexId v = 0; v < n; ++v) cursor[v] = g.row_offset(v);
    for (VertexId u = 0; u < n; ++u) {
      auto row = g.neighbors(u);
      const std::size_t base = g.row_offset(u);
      for (std::size_t i = 0; i < row.size(); ++i) {
        const std::size_t s = base + i;
        prev_[s] = i == 0 ? kNil : s - 1;
        next_[s] = i + 1 == row.size() ? kNil : s + 1;
        const VertexId v = row[i];
        if (u < v) {
          // Rows are sorted, so u's slot in row(v) comes up in ascending u.
          const std::size_t t = cursor[v]++;
          twin_[s] = t;
          twin_[t] = s;
        }
      }
      if (!row.empty()) head_[u] = base;
    }
  }

  VertexId target(std::size_t slot) const { return g_.half_edge_target(slot); }

  template <class F>
  void for_each(VertexId v, F&& f) const {
    for (std::size_t s = head_[v]; s != kNil; s = next_[s]) f(s, target(s));
  }

  void unlink_edge(std::size_t slot) {
    if (!linked_[slot]) return;
    unlink_half(slot, owner(slot));
    unlink_half(twin_[slot], target(slot));
  }

  std::size_t twin(std::size_t slot) const { return twin_[slot]; }
  bool linked(std::size_t slot) const { return linked_[slot]; }

 private:
  VertexId owner(std::size_t slot) const { return target(twin_[slot]); }

  void unlink_half(std::size_t s, VertexId v) {
    if (prev_[s] != kNil) next_[prev_[s]] = next_[s]; else head_[v] = next_[s];
    if (next_[s] != kNil) prev_[next_[s]] = prev_[s];
    linked_[s] = false;
  }

  const Graph& g_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> prev_;
  std::vector<std::size_t> twin_;
  std::vector<bool> linked_;
  std::vector<std::size_t> head_;
};

class CentralSolver {
 public:
  CentralSolver(const Graph& g, const CentralOptions& opt)
      : g_(g),
        n_(g.num_vertices()),
        threshold_(opt.delta * opt.alpha_hat),
        debug_(opt.debug_invariants),
        label_(n_),
        counter_(n_, 0),
        deg_w_(n_),
        deg_wbh_(n_),
        induced_(g) {
    result_.alpha_hat = opt.alpha_hat;
    result_.threshold = threshold_;
    for (VertexId v = 0; v < n_; ++v) {
      deg_w_[v] = deg_wbh_[v] = g.degree(v);
      label_[v] = g.degree(v) <= threshold_ ? Label::kWLow : Label::kWHigh;
    }
    w_count_ = n_;
    ops_ += n_ + g.num_half_edges();
    // Lowest id on top of the stack.
    for (VertexId v = static_cast<VertexId>(n_); v-- > 0;) {
      if (label_[v] == Label::kWLow) wlow_stack_.push_back(v);
    }
  }

  DominatingSetResult run() {
    std::vector<Label> before;
    if (debug_) before = label_;
    std::vector<VertexId> picked;
    std::vector<VertexId> batch;
    std::vector<Label> batch_old;
    while (w_count_ > 0) {
      const VertexId w = pop_wlow();
      ++result_.iterations;
      result_.max_pick_degree = std::max(result_.max_pick_degree, deg_wbh_[w]);

      picked.clear();
      induced_.for_each(w, [&](std::size_t, VertexId v) { picked.push_back(v); });
      ops_ += picked.size();
      if (picked.size() > threshold_) {
        throw InvariantViolation("chosen vertex " + std::to_string(w) + " has " +
                                 std::to_string(picked.size()) + " neighbours in W ∪ B_high");
      }

      batch.clear();
      for (VertexId v : picked) {
        ++counter_[v];
        result_.max_counter = std::max(result_.max_counter, counter_[v]);
        if (counter_[v] == threshold_) {
          batch.push_back(v);
          result_.passive.push_back(v);
        }
      }
      batch.push_back(w);
      result_.active.push_back(w);

      batch_old.clear();
      for (VertexId x : batch) {
        batch_old.push_back(label_[x]);
        if (in_w(label_[x])) --w_count_;
        label_[x] = Label::kD;
      }
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (in_w(batch_old[i])) leave_w(batch[i]);
      }
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (in_w_or_bhigh(batch_old[i])) leave_w_or_bhigh(batch[i]);
      }
      for (VertexId x : batch) enter_d(x);

      if (debug_) {
        recount(before);
        before = label_;
      }
    }

    for (VertexId v = 0; v < n_; ++v) {
      if (label_[v] == Label::kD) result_.dset.push_back(v);
    }
    result_.scan_ops = ops_;
    return std::move(result_);
  }

 private:
  VertexId pop_wlow() {
    while (!wlow_stack_.empty()) {
      const VertexId v = wlow_stack_.back();
      wlow_stack_.pop_back();
      ++ops_;
      if (label_[v] == Label::kWLow) return v;
    }
    throw InvariantViolation("W_low is empty while " + std::to_string(w_count_) +
                             " vertices remain undominated");
  }

  void leave_w(VertexId x) {
    ops_ += g_.degree(x);
    for (VertexId u : g_.neighbors(x)) {
      --deg_w_[u];
      if (label_[u] == Label::kBHigh && deg_w_[u] <= threshold_) {
        label_[u] = Label::kBLow;
        leave_w_or_bhigh(u);
      }
    }
  }

  void leave_w_or_bhigh(VertexId x) {
    ops_ += g_.degree(x);
    const std::size_t base = g_.row_offset(x);
    auto row = g_.neighbors(x);
    for (std::size_t i = 0; i < row.size(); ++i) {
      induced_.unlink_edge(base + i);
      const VertexId u = row[i];
      --deg_wbh_[u];
      if (label_[u] == Label::kWHigh && deg_wbh_[u] <= threshold_) {
        label_[u] = Label::kWLow;
        wlow_stack_.push_back(u);
      }
    }
  }

  void enter_d(VertexId x) {
    ops_ += g_.degree(x);
    for (VertexId u : g_.neighbors(x)) {
      if (!in_w(label_[u])) continue;
      --w_count_;
      if (deg_w_[u] <= threshold_) {
        label_[u] = Label::kBLow;
        leave_w(u);
        leave_w_or_bhigh(u);
      } else {
        label_[u] = Label::kBHigh;
        leave_w(u);
      }
    }
  }

  void recount(const std::vector<Label>& before) const {
    auto fail = [](const std::string& what) { throw InvariantViolation(what); };
    std::size_t w_total = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (!transition_allowed(before[v], label_[v])) {
        fail("forbidden transition " + std::string(label_name(before[v])) + " -> " +
             std::string(label_name(label_[v])) + " at vertex " + std::to_string(v));
      }
      bool dominated = false;
      std::size_t w_nb = 0;
      std::size_t wbh_nb = 0;
      for (VertexId u : g_.neighbors(v)) {
        dominated |= label_[u] == Label::kD;
        w_nb += in_w(label_[u]);
        wbh_nb += in_w_or_bhigh(label_[u]);
      }
      const Label l = label_[v];
      if (l != Label::kD && in_b(l) != dominated) {
        fail("vertex " + std::to_string(v) + " labelled " + std::string(label_name(l)) +
             (dominated ? " but has a neighbour in D" : " but has no neighbour in D"));
      }
      if (deg_w_[v] != w_nb || deg_wbh_[v] != wbh_nb) {
        fail("maintained degrees of vertex " + std::to_string(v) + " are stale");
      }
      if (l == Label::kWLow && wbh_nb > threshold_) fail("W_low vertex above threshold");
      if (l == Label::kWHigh && wbh_nb <= threshold_) fail("W_high vertex at or below threshold");
      if (l == Label::kBLow && w_nb > threshold_) fail("B_low vertex above threshold");
      if (l == Label::kBHigh && w_nb <= threshold_) fail("B_high vertex at or below threshold");
      if (counter_[v] > threshold_) fail("counter above threshold");
      if (in_w_or_bhigh(l)) {
        std::size_t listed = 0;
        induced_.for_each(v, [&](std::size_t, VertexId u) {
          if (!in_w_or_bhigh(label_[u])) fail("induced adjacency keeps a departed vertex");
          ++listed;
        });
        if (listed != wbh_nb) fail("induced adjacency row length mismatch");
      }
      w_total += in_w(l);
    }
    if (w_total != w_count_) fail("W size bookkeeping mismatch");
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t threshold_;
  bool debug_;
  std::vector<Label> label_;
  std::vector<std::size_t> counter_;
  std::vector<std::size_t> deg_w_;
  std::vector<std::size_t> deg_wbh_;
  InducedAdjacency induced_;
  std::vector<VertexId> wlow_stack_;
  std::size_t w_count_ = 0;
  std::uint64_t ops_ = 0;
  DominatingSetResult result_;
};

}  // namespace

DominatingSetResult solve_central(const Graph& g, const CentralOptions& options) {
  if (options.alpha_hat == 0) throw std::invalid_argument("alpha_hat must be positive");
  if (options.delta == 0) throw std::invalid_argument("delta must be positive");
  const std::size_t d = degeneracy_peel(g).degeneracy;
  if (options.delta * options.alpha_hat < d) {
    throw std::invalid_argument("threshold delta*alpha_hat=" +
                                std::to_string(options.delta * options.alpha_hat) +
                                " is below the degeneracy " + std::to_string(d));
  }
  return CentralSolver(g, options).run();
}

DominatingSetResult solve_central(const Graph& g, std::size_t alpha_hat) {
  CentralOptions opt;
  opt.alpha_hat = alpha_hat;
  return solve_central(g, opt);
}

DominatingSetResult solve_greedy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DominatingSetResult result;
  std::vector<bool> dominated(n, false);
  std::vector<std::size_t> gain(n);
  // Max-heap on (gain, -id). Gains only shrink, so a popped entry whose gain
  // is still current is the true maximum with the lowest id among ties.
  using Entry = std::pair<std::size_t, std::int64_t>;
  std::priority_queue<Entry> heap;
  for (VertexId v = 0; v < n; ++v) {
    gain[v] = g.degree(v) + 1;
    heap.emplace(gain[v], -static_cast<std::int64_t>(v));
  }
  result.scan_ops += n;
  std::size_t remaining = n;
  std::vector<bool> chosen(n, false);
  while (remaining > 0) {
    auto [stored, neg_id] = heap.top();
    heap.pop();
    ++result.scan_ops;
    const auto v = static_cast<VertexId>(-neg_id);
    if (chosen[v] || stored != gain[v]) {
      if (!chosen[v] && gain[v] > 0) heap.emplace(gain[v], neg_id);
      continue;
    }
    chosen[v] = true;
    result.active.push_back(v);
    auto cover = [&](VertexId u) {
      if (dominated[u]) return;
      dominated[u] = true;
      --remaining;
      --gain[u];
      result.scan_ops += g.degree(u);
      for (VertexId x : g.neighbors(u)) --gain[x];
    };
    cover(v);
    for (VertexId u : g.neighbors(v)) cover(u);
  }
  result.dset = result.active;
  std::sort(result.dset.begin(), result.dset.end());
  result.iterations = result.active.size();
  return result;
}

Coverage validate_dominating(const Graph& g, std::span<const VertexId> set) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> covered(n, false);
  for (VertexId s : set) {
    if (s >= n) throw std::invalid_argument("vertex " + std::to_string(s) + " out of range");
    covered[s] = true;
    for (VertexId u : g.neighbors(s)) covered[u] = true;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!covered[v]) return {false, v};
  }
  return {true, std::nullopt};
}

std::vector<std::string> audit_central(const Graph& g, const DominatingSetResult& r) {
  std::vector<std::string> problems;
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> kind(n, 0);  // 1 active, 2 passive
  for (VertexId v : r.active) {
    if (kind[v] != 0) problems.push_back("vertex " + std::to_string(v) + " recorded twice");
    kind[v] = 1;
  }
  for (VertexId v : r.passive) {
    if (kind[v] != 0) problems.push_back("vertex " + std::to_string(v) + " both active and passive");
    kind[v] = 2;
  }
  std::vector<VertexId> merged;
  for (VertexId v = 0; v < n; ++v) {
    if (kind[v] != 0) merged.push_back(v);
  }
  if (merged != r.dset) problems.push_back("dset differs from active ∪ passive");
  for (VertexId v = 0; v < n; ++v) {
    if (kind[v] == 0) continue;
    std::size_t active_nb = 0;
    std::size_t passive_nb = 0;
    for (VertexId u : g.neighbors(v)) {
      active_nb += kind[u] == 1;
      passive_nb += kind[u] == 2;
    }
    if (kind[v] == 2 && active_nb < r.threshold) {
      problems.push_back("passive vertex " + std::to_string(v) + " has only " +
                         std::to_string(active_nb) + " active neighbours");
    }
    if (kind[v] == 1 && passive_nb > r.threshold) {
      problems.push_back("active vertex " + std::to_string(v) + " has " +
                         std::to_string(passive_nb) + " passive neighbours");
    }
  }
  return problems;
}

}  // namespace domset
