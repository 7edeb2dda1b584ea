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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "domset/graph.hpp"
#include "domset/random.hpp"
#include "domset/sim/message.hpp"

namespace domset::sim {

enum class Mode : std::uint8_t { kLocal, kCongest };

std::string_view mode_name(Mode mode);

struct InboxEntry {
  VertexId from = 0;
  std::uint32_t port = 0;  // index of `from` in the receiver's neighbour row
  Message msg;
};

struct RoundInfo {
  std::size_t round = 0;          // 1-based
  bool any_busy_prev = false;     // OR of busy flags raised in the previous round
  std::size_t messages = 0;       // filled in for after_round only
};

struct SimOptions {
  Mode mode = Mode::kCongest;
  std::uint64_t seed = 0;
  std::size_t round_budget = 1;
  std::ostream* trace = nullptr;  // line-delimited JSON, one object per round
};

struct SimReport {
  Mode mode = Mode::kCongest;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t rounds = 0;
  std::size_t iterations = 0;
  std::uint64_t messages_total = 0;
  std::vector<std::uint64_t> messages_per_round;
  std::size_t max_message_bits = 0;  // per directed edge per round
  std::size_t width_limit = 0;
  bool terminated = false;
  bool budget_exhausted = false;
  bool aborted = false;
  std::vector<VertexId> dset;
  std::vector<std::string> violations;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const SimReport& report);

namespace detail {

struct PendingSend {
  std::uint32_t port;  // kBroadcastPort for all neighbours
  Message msg;
};
inline constexpr std::uint32_t kBroadcastPort = UINT32_MAX;

}  // namespace detail

/// The only view a node program gets of the world: its own state, the
/// messages delivered to it this round, and its private random stream.
template <class State>
class NodeContext {
 public:
  NodeContext(VertexId id, std::size_t n, std::span<const VertexId> neighbors, std::size_t round,
              bool any_busy_prev, State& state, std::span<const InboxEntry> inbox, std::uint64_t seed,
              std::vector<detail::PendingSend>& out)
      : id_(id), n_(n), neighbors_(neighbors), round_(round), any_busy_prev_(any_busy_prev),
        state_(state), inbox_(inbox), seed_(seed), out_(out) {}

  VertexId id() const { return id_; }
  std::size_t num_vertices() const { return n_; }
  std::size_t degree() const { return neighbors_.size(); }
  std::span<const VertexId> neighbors() const { return neighbors_; }
  std::size_t round() const { return round_; }
  bool any_busy_prev() const { return any_busy_prev_; }

  State& state() { return state_; }
  std::span<const InboxEntry> inbox() const { return inbox_; }
  // Seeded on first use; most steps never draw.
  NodeRng& rng() {
    if (!rng_) rng_ = node_rng(seed_, id_, round_);
    return *rng_;
  }

  void send(std::uint32_t port, Message msg) {
    if (port >= neighbors_.size()) throw std::out_of_range("send: port out of range");
    out_.push_back({port, msg});
  }
  void broadcast(Message msg) { out_.push_back({detail::kBroadcastPort, msg}); }

  void set_busy() { busy_ = true; }
  void set_done(bool done) { done_ = done; }
  bool busy() const { return busy_; }
  bool done() const { return done_; }

 private:
  VertexId id_;
  std::size_t n_;
  std::span<const VertexId> neighbors_;
  std::size_t round_;
  bool any_busy_prev_;
  State& state_;
  std::span<const InboxEntry> inbox_;
  std::uint64_t seed_;
  std::optional<NodeRng> rng_;
  std::vector<detail::PendingSend>& out_;
  bool busy_ = false;
  bool done_ = false;
};

template <class P>
concept NodeProgram = requires(const P& p, const Graph& g, VertexId v, const typename P::State& s,
                               NodeContext<typename P::State>& ctx) {
  { p.initial_state(g, v) } -> std::same_as<typename P::State>;
  { p.step(ctx) };
  { p.in_output(s) } -> std::convertible_to<bool>;
};

/// Lock-step synchronous executor. Each round every node steps in ascending
/// id order; everything sent in round t lands in the inboxes of round t+1.
/// Optional protocol hooks: before_round(info, states) runs oracles,
/// after_round(info, states, trace_line) runs monitors, finalize(states,
/// report) copies protocol statistics out.
template <NodeProgram P>
class Simulator {
 public:
  using State = typename P::State;

  Simulator(const Graph& g, P& protocol) : g_(g), protocol_(protocol) { build_twins(); }

  SimReport run(const SimOptions& opt) {
    if (opt.round_budget < 1) throw std::invalid_argument("round budget must be at least 1");
    const std::size_t n = g_.num_vertices();
    SimReport report;
    report.mode = opt.mode;
    report.seed = opt.seed;
    report.n = n;
    report.width_limit = width_limit(n);

    std::vector<State> states;
    states.reserve(n);
    for (VertexId v = 0; v < n; ++v) states.push_back(protocol_.initial_state(g_, v));

    if (n == 0) {
      report.terminated = true;
      finish(states, report);
      return report;
    }

    std::vector<std::vector<InboxEntry>> inbox(n), next(n);
    std::vector<detail::PendingSend> out;
    std::vector<std::pair<std::uint32_t, std::size_t>> port_bits;
    bool any_busy = false;

    for (std::size_t round = 1; round <= opt.round_budget; ++round) {
      RoundInfo info{round, any_busy, 0};
      if constexpr (requires { protocol_.before_round(info, std::span<State>(states)); }) {
        protocol_.before_round(info, std::span<State>(states));
      }

      bool all_done = true;
      bool busy_now = false;
      std::size_t sent = 0;
      std::size_t round_bits = 0;
      for (VertexId v = 0; v < n; ++v) {
        out.clear();
        NodeContext<State> ctx(v, n, g_.neighbors(v), round, any_busy, states[v], inbox[v],
                               opt.seed, out);
        protocol_.step(ctx);
        all_done = all_done && ctx.done();
        busy_now = busy_now || ctx.busy();
        if (out.empty()) continue;

        sent += deliver(v, out, next);
        round_bits = std::max(round_bits, edge_bits(v, out, port_bits));
      }
      for (VertexId v = 0; v < n; ++v) inbox[v].clear();
      std::swap(inbox, next);
      any_busy = busy_now;

      report.rounds = round;
      report.messages_total += sent;
      report.messages_per_round.push_back(sent);
      report.max_message_bits = std::max(report.max_message_bits, round_bits);

      nlohmann::ordered_json line;
      nlohmann::ordered_json* line_ptr = nullptr;
      if (opt.trace != nullptr) {
        line["type"] = "round";
        line["round"] = round;
        line["messages"] = sent;
        line["max_bits"] = round_bits;
        line_ptr = &line;
      }
      info.messages = sent;
      if constexpr (requires {
                      protocol_.after_round(info, std::span<const State>(states), line_ptr);
                    }) {
        protocol_.after_round(info, std::span<const State>(states), line_ptr);
      }
      if (line_ptr != nullptr) *opt.trace << line.dump() << '\n';

      if (opt.mode == Mode::kCongest && round_bits > report.width_limit) {
        report.violations.push_back("round " + std::to_string(round) + ": " +
                                    std::to_string(round_bits) + " bits on one edge exceeds limit " +
                                    std::to_string(report.width_limit));
        report.aborted = true;
        break;
      }
      if (all_done) {
        report.terminated = true;
        break;
      }
    }
    report.budget_exhausted = !report.terminated && !report.aborted;
    finish(states, report);
    return report;
  }

 private:
  void build_twins() {
    twin_port_.resize(g_.num_half_edges());
    for (VertexId u = 0; u < g_.num_vertices(); ++u) {
      auto row = g_.neighbors(u);
      for (std::size_t i = 0; i < row.size(); ++i) {
        twin_port_[g_.row_offset(u) + i] = static_cast<std::uint32_t>(g_.port_of(row[i], u));
      }
    }
  }

  std::size_t deliver(VertexId v, const std::vector<detail::PendingSend>& out,
                      std::vector<std::vector<InboxEntry>>& next) const {
    auto row = g_.neighbors(v);
    const std::size_t base = g_.row_offset(v);
    std::size_t sent = 0;
    for (const auto& s : out) {
      if (s.port == detail::kBroadcastPort) {
        for (std::size_t p = 0; p < row.size(); ++p) {
          next[row[p]].push_back({v, twin_port_[base + p], s.msg});
        }
        sent += row.size();
      } else {
        next[row[s.port]].push_back({v, twin_port_[base + s.port], s.msg});
        ++sent;
      }
    }
    return sent;
  }

  // Largest number of bits v put on a single incident edge this round.
  std::size_t edge_bits(VertexId v, const std::vector<detail::PendingSend>& out,
                        std::vector<std::pair<std::uint32_t, std::size_t>>& scratch) const {
    const std::size_t n = g_.num_vertices();
    std::size_t broadcast_bits = 0;
    scratch.clear();
    for (const auto& s : out) {
      const std::size_t bits = message_bit_width(s.msg, n);
      if (s.port == detail::kBroadcastPort) {
        broadcast_bits += bits;
      } else {
        scratch.emplace_back(s.port, bits);
      }
    }
    if (g_.degree(v) == 0) return 0;
    std::size_t best = broadcast_bits;
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t i = 0; i < scratch.size();) {
      std::size_t sum = broadcast_bits;
      std::size_t j = i;
      for (; j < scratch.size() && scratch[j].first == scratch[i].first; ++j) sum += scratch[j].second;
      best = std::max(best, sum);
      i = j;
    }
    return best;
  }

  void finish(std::span<const State> states, SimReport& report) {
    for (VertexId v = 0; v < states.size(); ++v) {
      if (protocol_.in_output(states[v])) report.dset.push_back(v);
    }
    if constexpr (requires { protocol_.finalize(states, report); }) {
      protocol_.finalize(states, report);
    }
  }

  const Graph& g_;
  P& protocol_;
  std::vector<std::uint32_t> twin_port_;
};

template <NodeProgram P>
SimReport run(const Graph& g, P& protocol, const SimOptions& opt) {
  Simulator<P> sim(g, protocol);
  return sim.run(opt);
}

}  // namespace domset::sim
