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

#include <gtest/gtest.h>

#include <sstream>

#include "domset/central.hpp"
#include "domset/degeneracy.hpp"
#include "domset/dist/aux_graphs.hpp"
#include "domset/dist/mis.hpp"
#include "domset/dist/node_state.hpp"
#include "domset/dist/protocol.hpp"
#include "domset/dist/trace_check.hpp"
#include "domset/exact.hpp"
#include "domset/generators.hpp"
#include "domset/random.hpp"
#include "oracles.hpp"

namespace domset::dist {
namespace {

using sim::InboxEntry;
using sim::Message;
using sim::MessageKind;

InboxEntry msg(MessageKind k, std::uint32_t port = 0) { return InboxEntry{port, port, Message{k, {}}}; }

DistNodeState state_with(Label label, std::uint32_t deg_w, std::uint32_t deg_wbh, std::uint32_t threshold = 4) {
  DistNodeState s;
  s.label = label;
  s.deg_w = deg_w;
  s.deg_wbh = deg_wbh;
  s.alpha = 1;
  s.threshold = threshold;
  return s;
}

std::vector<Label> labels_of_star_start(std::size_t n) {
  std::vector<Label> labels(n, Label::kWLow);
  labels[0] = Label::kWHigh;
  return labels;
}

struct TracedRun {
  sim::SimReport report;
  std::string trace;
  std::vector<std::vector<VertexId>> joined;  // per act round
};

TracedRun run_traced(const Graph& g, const DistConfig& cfg, std::uint64_t seed) {
  TracedRun out;
  std::ostringstream trace;
  DistRunOptions opt;
  opt.seed = seed;
  opt.trace = &trace;
  out.report = run_distributed(g, cfg, opt);
  out.trace = trace.str();
  std::istringstream in(out.trace);
  std::string line;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    if (j.contains("joined")) out.joined.push_back(j["joined"].get<std::vector<VertexId>>());
  }
  return out;
}

std::size_t alpha_of(const Graph& g) { return degeneracy_peel(g).alpha_hat; }

// ---------------------------------------------------------------------------
// Bookkeeping

TEST(Bookkeeping, DominatedWVertexWithManyWNeighboursBecomesBHigh) {
  auto s = state_with(Label::kWHigh, 6, 6);  // degW = T + 2
  std::vector<InboxEntry> in{msg(MessageKind::kMovedWToD)};
  auto out = handle_bookkeeping(s, in);
  EXPECT_EQ(s.label, Label::kBHigh);
  EXPECT_EQ(s.deg_w, 5u);
  EXPECT_EQ(s.deg_wbh, 5u);
  EXPECT_EQ(out.broadcasts, std::vector<MessageKind>{MessageKind::kMovedWToBHigh});
  EXPECT_TRUE(out.violations.empty());
}

TEST(Bookkeeping, DominatedAtThresholdPlusOneLandsInBLow) {
  // degW drops to T before classification, so the vertex is B_low.
  auto s = state_with(Label::kWHigh, 5, 5);
  std::vector<InboxEntry> in{msg(MessageKind::kMovedWToD)};
  auto out = handle_bookkeeping(s, in);
  EXPECT_EQ(s.label, Label::kBLow);
  EXPECT_EQ(out.broadcasts, std::vector<MessageKind>{MessageKind::kMovedWToBLow});
}

TEST(Bookkeeping, BHighDemotedWhenWDegreeReachesThreshold) {
  auto s = state_with(Label::kBHigh, 5, 5);
  std::vector<InboxEntry> in{msg(MessageKind::kMovedWToBLow)};
  auto out = handle_bookkeeping(s, in);
  EXPECT_EQ(s.deg_w, 4u);
  EXPECT_EQ(s.label, Label::kBLow);
  EXPECT_EQ(out.broadcasts, std::vector<MessageKind>{MessageKind::kMovedBHighToBLow});
}

TEST(Bookkeeping, CounterReachingThresholdEntersD) {
  auto s = state_with(Label::kWLow, 2, 2);
  s.counter = 3;
  std::vector<InboxEntry> in{msg(MessageKind::kIncrementCounter)};
  auto out = handle_bookkeeping(s, in);
  EXPECT_EQ(s.label, Label::kD);
  EXPECT_EQ(s.counter, 4u);
  EXPECT_EQ(out.broadcasts, std::vector<MessageKind>{MessageKind::kMovedWToD});
}

TEST(Bookkeeping, CounterFreezesOnEntry) {
  auto s = state_with(Label::kBHigh, 6, 6);
  s.counter = 3;
  std::vector<InboxEntry> in{msg(MessageKind::kIncrementCounter, 0), msg(MessageKind::kIncrementCounter, 1),
                             msg(MessageKind::kIncrementCounter, 2)};
  auto out = handle_bookkeeping(s, in);
  EXPECT_EQ(s.label, Label::kD);
  EXPECT_EQ(s.counter, 4u);
  EXPECT_EQ(out.broadcasts, std::vector<MessageKind>{MessageKind::kMovedBHighToD});
}

TEST(Bookkeeping, WHighAdmittedToWLow) {
  auto s = state_with(Label::kWHigh, 3, 5);
  std::vector<InboxEntry> in{msg(MessageKind::kMovedBHighToBLow)};
  auto out = handle_bookkeeping(s, in);
  EXPECT_EQ(s.label, Label::kWLow);
  EXPECT_EQ(s.deg_wbh, 4u);
  EXPECT_TRUE(out.broadcasts.empty());
}

TEST(Bookkeeping, DAndBLowOnlyTrackDegrees) {
  auto d = state_with(Label::kD, 3, 3);
  std::vector<InboxEntry> in{msg(MessageKind::kIncrementCounter), msg(MessageKind::kMovedWToD, 1)};
  auto out = handle_bookkeeping(d, in);
  EXPECT_EQ(d.label, Label::kD);
  EXPECT_EQ(d.counter, 0u);
  EXPECT_EQ(d.deg_w, 2u);
  EXPECT_EQ(d.deg_wbh, 2u);
  EXPECT_TRUE(out.broadcasts.empty());
}

TEST(Bookkeeping, UnderflowIsReported) {
  auto s = state_with(Label::kBLow, 0, 0);
  std::vector<InboxEntry> in{msg(MessageKind::kMovedWToBHigh)};
  EXPECT_FALSE(handle_bookkeeping(s, in).violations.empty());
}

// ---------------------------------------------------------------------------
// Auxiliary graphs

TEST(AuxGraphs, StarGLowIsCliqueOnLeaves) {
  Graph star = gen_star(6);
  auto labels = labels_of_star_start(6);
  AuxGraphView low = build_g_low(star, labels);
  EXPECT_EQ(low.vertices, (std::vector<VertexId>{1, 2, 3, 4, 5}));
  EXPECT_EQ(low.graph, gen_complete(5));
}

TEST(AuxGraphs, AllBLowGivesEmptyViews) {
  Graph g = gen_grid(3, 3);
  std::vector<Label> labels(9, Label::kBLow);
  EXPECT_EQ(build_g_low(g, labels).graph.num_vertices(), 0u);
  EXPECT_EQ(build_g_bi(g, labels).graph.num_vertices(), 0u);
}

TEST(AuxGraphs, PathAllLowHasNoBipartiteEdges) {
  Graph p4 = gen_path(4);
  std::vector<Label> labels(4, Label::kWLow);
  AuxGraphView bi = build_g_bi(p4, labels);
  EXPECT_EQ(bi.graph.num_vertices(), 4u);
  EXPECT_EQ(bi.graph.num_edges(), 0u);
  AuxGraphView low = build_g_low(p4, labels);
  // 2-paths 0-1-2 and 1-2-3 only: direct edges are not G_low edges.
  EXPECT_EQ(low.graph.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
}

TEST(AuxGraphs, GLowMatchesTwoPathEnumeration) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_gnm(14, 25, seed);
    Rng rng(seed);
    std::vector<Label> labels(14);
    for (auto& l : labels) l = static_cast<Label>(rng.below(5));
    AuxGraphView low = build_g_low(g, labels);
    std::vector<Edge> expected;
    for (std::size_t i = 0; i < low.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < low.vertices.size(); ++j) {
        bool path = false;
        for (VertexId x = 0; x < 14; ++x) {
          path = path || (in_w_or_bhigh(labels[x]) && g.has_edge(x, low.vertices[i]) && g.has_edge(x, low.vertices[j]));
        }
        if (path) expected.emplace_back(i, j);
      }
    }
    EXPECT_EQ(low.graph.edges(), expected) << "seed " << seed;
  }
}

TEST(AuxGraphs, BipartiteSidesAndTwoHop) {
  Graph star = gen_star(6);
  auto labels = labels_of_star_start(6);
  labels[5] = Label::kBLow;
  AuxGraphView bi = build_g_bi(star, labels);
  ASSERT_EQ(bi.vertices.size(), 5u);
  EXPECT_TRUE(bi.high_side[0]);
  EXPECT_EQ(bi.graph.num_edges(), 4u);
  TwoHop th = two_hop(bi, 1);  // leaf 1
  EXPECT_EQ(th.vertices, (std::vector<VertexId>{0, 2, 3, 4}));
  EXPECT_EQ(th.edges.size(), 4u);
}

TEST(CheckMis, FlagsDependenceAndNonMaximality) {
  CliqueCover c = cover_from_graph(gen_path(4));
  EXPECT_TRUE(check_mis(c, std::vector<std::uint8_t>{1, 0, 1, 0}).empty());
  EXPECT_FALSE(check_mis(c, std::vector<std::uint8_t>{1, 1, 0, 1}).empty());
  EXPECT_FALSE(check_mis(c, std::vector<std::uint8_t>{1, 0, 0, 0}).empty());
}

TEST(MisProviders, ProduceMaximalIndependentSets) {
  SequentialMis seq;
  LubyMis luby;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gen_gnm(30, 20 + 3 * seed, seed);
    CliqueCover c = cover_from_graph(g);
    auto a = seq.select(c, seed);
    auto b = luby.select(c, seed);
    EXPECT_TRUE(check_mis(c, a.in_set).empty());
    EXPECT_TRUE(check_mis(c, b.in_set).empty());
    // Sequential is the lowest-id greedy MIS.
    std::vector<std::uint8_t> greedy(30, 0);
    for (VertexId v = 0; v < 30; ++v) {
      bool free = true;
      for (VertexId u : g.neighbors(v)) free = free && !greedy[u];
      greedy[v] = free;
    }
    EXPECT_EQ(a.in_set, greedy);
  }
  Graph g = gen_forest_union(200, 3, 1);
  std::vector<Label> labels(200, Label::kWLow);
  for (VertexId v = 0; v < 200; v += 3) labels[v] = Label::kWHigh;
  CliqueCover low = g_low_cover(g, labels);
  EXPECT_TRUE(check_mis(low, luby.select(low, 3).in_set).empty());
  EXPECT_EQ(seq.default_rounds(1024), 1u);
  EXPECT_EQ(luby.default_rounds(1024), 10u);
}

// ---------------------------------------------------------------------------
// Protocols

TEST(LocalMis, StarTakesAllLeaves) {
  Graph star = gen_star(6);
  auto run = run_traced(star, protocol_local_mis(std::make_shared<SequentialMis>(), 1), 0);
  EXPECT_TRUE(run.report.violations.empty()) << run.report.violations.front();
  EXPECT_EQ(run.report.dset, (std::vector<VertexId>{1, 2, 3, 4, 5}));
  EXPECT_EQ(run.report.iterations, 2u);
  ASSERT_EQ(run.joined.size(), 2u);
  EXPECT_EQ(run.joined[0], std::vector<VertexId>{1});
  EXPECT_LE(run.report.dset.size(), 16u * solve_exact(star).result->opt_size);
}

TEST(LocalMis, SingleVertexAndPath) {
  auto one = run_distributed(gen_empty(1), protocol_local_mis(nullptr, 1), {});
  EXPECT_EQ(one.dset, std::vector<VertexId>{0});
  EXPECT_EQ(one.iterations, 1u);

  // G_low = {0-2, 1-3}; the lowest-id MIS {0, 1} leaves 3 undominated, so
  // 3 joins alone in the second iteration.
  auto p4 = run_traced(gen_path(4), protocol_local_mis(std::make_shared<SequentialMis>(), 1), 0);
  ASSERT_EQ(p4.joined.size(), 2u);
  EXPECT_EQ(p4.joined[0], (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(p4.joined[1], std::vector<VertexId>{3});
  EXPECT_EQ(p4.report.dset, (std::vector<VertexId>{0, 1, 3}));
  EXPECT_EQ(p4.report.stats["mis_rounds_charged"], 1u);
  EXPECT_EQ(p4.report.rounds, 12u);  // per iteration: one charged round, act, four bookkeeping rounds
}

TEST(LocalMis, LubyProviderChargesLogRounds) {
  Graph g = gen_forest_union(64, 2, 5);
  auto r = run_distributed(g, protocol_local_mis(std::make_shared<LubyMis>(), alpha_of(g)), {});
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.stats["mis_rounds_charged"], 6u);
  EXPECT_EQ(r.rounds, r.iterations * 11);
  EXPECT_TRUE(validate_dominating(g, r.dset).dominating);
}

TEST(CongestMis, SingleVertex) {
  auto r = run_distributed(gen_empty(1), protocol_congest_mis(1), {});
  EXPECT_EQ(r.dset, std::vector<VertexId>{0});
  EXPECT_TRUE(r.violations.empty());
}

TEST(CongestMis, StarPicksExactlyOneLeafFirst) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto run = run_traced(gen_star(6), protocol_congest_mis(1), seed);
    EXPECT_TRUE(run.report.violations.empty());
    EXPECT_EQ(run.report.dset.size(), 5u);
    ASSERT_FALSE(run.joined.empty());
    EXPECT_EQ(run.joined[0].size(), 1u);  // the leaves form one G_low clique
  }
}

TEST(CongestMis, ForestUnionIterationsAreMis) {
  Graph g = gen_forest_union(256, 2, 11);
  DistConfig cfg = protocol_congest_mis(alpha_of(g));
  cfg.recount_degrees = true;
  auto run = run_traced(g, cfg, 3);
  EXPECT_TRUE(run.report.violations.empty()) << run.report.violations.front();
  EXPECT_EQ(run.report.stats["mis_checks"].get<std::size_t>(), run.report.iterations);
  EXPECT_LE(run.report.max_message_bits, sim::width_limit(256));
  EXPECT_TRUE(validate_dominating(g, run.report.dset).dominating);
  std::istringstream in(run.trace);
  auto checked = check_trace(in, g);
  EXPECT_TRUE(checked.ok()) << checked.violations.front();
  EXPECT_EQ(checked.mis_checks, run.report.iterations);
}

TEST(Fast, EmptyGraphJoinsInOneIteration) {
  auto r = run_distributed(gen_empty(5), protocol_fast(1), {});
  EXPECT_EQ(r.dset.size(), 5u);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_EQ(r.rounds, 7u);
  EXPECT_EQ(r.messages_total, 0u);
}

TEST(Fast, StarAcksOneLeaf) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto run = run_traced(gen_star(6), protocol_fast(1), seed);
    EXPECT_TRUE(run.report.violations.empty());
    ASSERT_EQ(run.joined.size(), 2u);
    EXPECT_EQ(run.joined[0].size(), 1u);
    EXPECT_EQ(run.joined[1].size(), 4u);
    EXPECT_EQ(run.report.dset.size(), 5u);
  }
}

TEST(Fast, IncrementBoundAndCounterCapOnMatrix) {
  for (std::size_t k : {1, 2, 4}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Graph g = gen_forest_union(300, k, seed);
      DistConfig cfg = protocol_fast(alpha_of(g));
      cfg.recount_degrees = true;
      auto run = run_traced(g, cfg, seed);
      ASSERT_TRUE(run.report.violations.empty()) << run.report.violations.front();
      EXPECT_TRUE(run.report.terminated);
      EXPECT_LT(run.report.stats["max_counter"].get<std::size_t>(), 2 * 4 * alpha_of(g));
      std::istringstream in(run.trace);
      auto checked = check_trace(in, g);
      EXPECT_TRUE(checked.ok()) << checked.violations.front();
      EXPECT_EQ(checked.dset, run.report.dset);
    }
  }
}

TEST(Protocols, RatioAgainstExactOnSmallInstances) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(14);
    Graph g = seed % 2 ? gen_forest_union(n, 1 + rng.below(3), seed) : gen_gnm(n, rng.below(std::min(2 * n, n * (n - 1) / 2) + 1), seed);
    const std::size_t a = alpha_of(g);
    const std::size_t opt = testing::brute_force_mds(g);
    for (const DistConfig& cfg : {protocol_local_mis(nullptr, a), protocol_congest_mis(a), protocol_fast(a)}) {
      auto r = run_distributed(g, cfg, {seed, 0, nullptr});
      ASSERT_TRUE(r.terminated);
      EXPECT_TRUE(r.violations.empty()) << r.violations.front();
      EXPECT_TRUE(testing::dominates(g, r.dset));
      EXPECT_LE(r.dset.size(), 2 * 4 * 4 * a * opt);
    }
  }
}

TEST(Protocols, RunsAreDeterministic) {
  Graph g = gen_forest_union(500, 3, 2);
  for (const DistConfig& cfg : {protocol_local_mis(std::make_shared<LubyMis>(), 5), protocol_congest_mis(5),
                                protocol_fast(5), unknown_alpha_wrapper(protocol_fast(5))}) {
    auto a = run_traced(g, cfg, 17);
    auto b = run_traced(g, cfg, 17);
    EXPECT_EQ(sim::to_json(a.report).dump(), sim::to_json(b.report).dump());
    EXPECT_EQ(a.trace, b.trace);
  }
}

TEST(UnknownAlpha, TreeFinishesInFirstPhase) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph tree = gen_forest_union(200, 1, seed);
    auto r = run_distributed(tree, unknown_alpha_wrapper(protocol_fast(1)), {seed, 0, nullptr});
    EXPECT_TRUE(r.terminated);
    EXPECT_EQ(r.stats["final_phase"], 0u);
    EXPECT_TRUE(r.violations.empty());
  }
}

TEST(UnknownAlpha, PhaseBoundOnForestUnions) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen_forest_union(400, 4, seed);
    const std::size_t a = alpha_of(g);
    auto r = run_distributed(g, unknown_alpha_wrapper(protocol_fast(a)), {seed, 0, nullptr});
    ASSERT_TRUE(r.terminated);
    EXPECT_LE(r.stats["final_phase"].get<std::size_t>(), sim::ceil_log2(a));
    EXPECT_TRUE(r.violations.empty());
  }
}

TEST(UnknownAlpha, ShortPhasesForceGuessing) {
  // One iteration per guess: the wrapper must step through several phases.
  Graph g = gen_forest_union(300, 4, 9);
  const std::size_t a = alpha_of(g);
  for (DistConfig inner : {protocol_fast(a), protocol_congest_mis(a), protocol_local_mis(nullptr, a)}) {
    inner.recount_degrees = true;
    auto run = run_traced(g, unknown_alpha_wrapper(inner, [](std::size_t) { return 1; }), 4);
    ASSERT_TRUE(run.report.terminated);
    EXPECT_TRUE(run.report.violations.empty()) << run.report.violations.front();
    EXPECT_GT(run.report.stats["final_phase"].get<std::size_t>(), 0u);
    EXPECT_TRUE(validate_dominating(g, run.report.dset).dominating);
    std::istringstream in(run.trace);
    EXPECT_TRUE(check_trace(in, g).ok());
  }
}

TEST(UnknownAlpha, DoubledRatioBound) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const std::size_t n = 2 + rng.below(13);
    Graph g = gen_forest_union(n, 1 + rng.below(4), seed);
    const std::size_t a = alpha_of(g);
    const std::size_t rounded = std::size_t{1} << sim::ceil_log2(a);
    auto r = run_distributed(g, unknown_alpha_wrapper(protocol_fast(a)), {seed, 0, nullptr});
    ASSERT_TRUE(r.terminated);
    EXPECT_LE(r.dset.size(), 2 * 4 * 4 * rounded * testing::brute_force_mds(g));
  }
}

TEST(TraceCheck, RejectsTamperedTraces) {
  Graph g = gen_star(6);
  auto run = run_traced(g, protocol_fast(1), 0);
  std::istringstream good(run.trace);
  EXPECT_TRUE(check_trace(good, g).ok());

  std::string forged = run.trace;
  const auto pos = forged.find("\"W_high\",\"B_low\"");
  ASSERT_NE(pos, std::string::npos);
  forged.replace(pos, 16, "\"B_low\",\"W_high\"");
  std::istringstream bad(forged);
  EXPECT_FALSE(check_trace(bad, g).ok());

  std::istringstream truncated(run.trace.substr(0, run.trace.find('\n') + 1));
  EXPECT_THROW(check_trace(truncated, g), std::runtime_error);
}

}  // namespace
}  // namespace domset::dist
