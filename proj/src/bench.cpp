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

#include "domset/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "domset/central.hpp"
#include "domset/degeneracy.hpp"
#include "domset/dist/protocol.hpp"
#include "domset/exact.hpp"
#include "domset/generators.hpp"
#include "domset/random.hpp"

namespace domset {

namespace {

std::uint64_t cell_seed(std::uint64_t base, std::size_t n, std::size_t k, std::size_t trial) {
  return splitmix64(base ^ splitmix64(n * 1315423911ULL + k * 2654435761ULL + trial));
}

struct Accumulator {
  BenchRow row;
  std::size_t rounds_sum = 0;
  double m_sum = 0;
  double scan_sum = 0;

  void add_graph(const Graph& g, std::size_t alpha_hat) {
    ++row.trials;
    m_sum += static_cast<double>(g.num_edges());
    row.alpha_hat = std::max(row.alpha_hat, alpha_hat);
  }
  BenchRow finish() {
    if (row.trials > 0) {
      row.m_mean = m_sum / static_cast<double>(row.trials);
      row.rounds_mean = static_cast<double>(rounds_sum) / static_cast<double>(row.trials);
      row.scan_ops_mean = scan_sum / static_cast<double>(row.trials);
    }
    return row;
  }
};

std::vector<BenchRow> central_linear(const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  const std::size_t k = opt.k.value_or(4);
  for (std::size_t lg = opt.grid_min.value_or(12); lg <= opt.grid_max.value_or(18); ++lg) {
    const std::size_t n = std::size_t{1} << lg;
    Accumulator acc;
    acc.row.n = n;
    acc.row.k = k;
    acc.row.algorithm = "central";
    for (std::size_t t = 0; t < opt.seeds.value_or(3); ++t) {
      Graph g = gen_forest_union(n, k, cell_seed(opt.seed, n, k, t));
      const std::size_t a = degeneracy_peel(g).alpha_hat;
      auto r = solve_central(g, a);
      acc.add_graph(g, a);
      acc.scan_sum += static_cast<double>(r.scan_ops);
      acc.row.iterations_max = std::max(acc.row.iterations_max, r.iterations);
    }
    rows.push_back(acc.finish());
  }
  return rows;
}

std::vector<BenchRow> protocol_rounds(const BenchOptions& opt, dist::Algo algo) {
  std::vector<BenchRow> rows;
  const std::size_t k = opt.k.value_or(2);
  for (std::size_t lg = opt.grid_min.value_or(10); lg <= opt.grid_max.value_or(16); ++lg) {
    const std::size_t n = std::size_t{1} << lg;
    Accumulator acc;
    acc.row.n = n;
    acc.row.k = k;
    acc.row.algorithm = std::string(dist::algo_name(algo));
    for (std::size_t t = 0; t < opt.seeds.value_or(32); ++t) {
      const std::uint64_t seed = cell_seed(opt.seed, n, k, t);
      Graph g = gen_forest_union(n, k, seed);
      const std::size_t a = degeneracy_peel(g).alpha_hat;
      dist::DistConfig cfg = algo == dist::Algo::kFast ? dist::protocol_fast(a) : dist::protocol_congest_mis(a);
      auto r = dist::run_distributed(g, cfg, {seed, 0, nullptr});
      acc.add_graph(g, a);
      acc.rounds_sum += r.rounds;
      acc.row.rounds_max = std::max(acc.row.rounds_max, r.rounds);
      acc.row.iterations_max = std::max(acc.row.iterations_max, r.iterations);
      acc.row.violations += r.violations.size() + (r.terminated ? 0 : 1);
    }
    rows.push_back(acc.finish());
  }
  return rows;
}

std::vector<BenchRow> ratio(const BenchOptions& opt) {
  struct Algo {
    std::string name;
    std::size_t (*size)(const Graph&, std::size_t alpha, std::uint64_t seed);
  };
  const std::vector<Algo> algos = {
      {"central", [](const Graph& g, std::size_t a, std::uint64_t) { return solve_central(g, a).dset.size(); }},
      {"greedy", [](const Graph& g, std::size_t, std::uint64_t) { return solve_greedy(g).dset.size(); }},
      {"local-mis",
       [](const Graph& g, std::size_t a, std::uint64_t s) {
         return dist::run_distributed(g, dist::protocol_local_mis(nullptr, a), {s, 0, nullptr}).dset.size();
       }},
      {"congest-mis",
       [](const Graph& g, std::size_t a, std::uint64_t s) {
         return dist::run_distributed(g, dist::protocol_congest_mis(a), {s, 0, nullptr}).dset.size();
       }},
      {"fast",
       [](const Graph& g, std::size_t a, std::uint64_t s) {
         return dist::run_distributed(g, dist::protocol_fast(a), {s, 0, nullptr}).dset.size();
       }},
      {"fast-unknown-alpha",
       [](const Graph& g, std::size_t a, std::uint64_t s) {
         return dist::run_distributed(g, dist::unknown_alpha_wrapper(dist::protocol_fast(a)), {s, 0, nullptr})
             .dset.size();
       }},
  };
  std::vector<std::size_t> ks = {1, 2, 4, 8};
  if (opt.k) ks = {*opt.k};
  std::vector<BenchRow> rows;
  for (std::size_t k : ks) {
    for (const Algo& algo : algos) {
      Accumulator acc;
      acc.row.n = opt.grid_max.value_or(16);
      acc.row.k = k;
      acc.row.algorithm = algo.name;
      double worst = 0;
      for (std::size_t n = opt.grid_min.value_or(4); n <= opt.grid_max.value_or(16); ++n) {
        for (std::size_t t = 0; t < opt.seeds.value_or(20); ++t) {
          const std::uint64_t seed = cell_seed(opt.seed, n, k, t);
          Graph g = gen_forest_union(n, k, seed);
          const std::size_t a = degeneracy_peel(g).alpha_hat;
          auto exact = solve_exact(g);
          if (!exact.result) continue;
          acc.add_graph(g, a);
          const std::size_t opt_size = std::max<std::size_t>(1, exact.result->opt_size);
          worst = std::max(worst, static_cast<double>(algo.size(g, a, seed)) / static_cast<double>(opt_size));
        }
      }
      acc.row.ratio_max = worst;
      rows.push_back(acc.finish());
    }
  }
  return rows;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opt) {
  if (opt.suite == "central-linear") return central_linear(opt);
  if (opt.suite == "fast-rounds") return protocol_rounds(opt, dist::Algo::kFast);
  if (opt.suite == "mis-rounds") return protocol_rounds(opt, dist::Algo::kCongestMis);
  if (opt.suite == "ratio") return ratio(opt);
  throw std::invalid_argument("unknown bench suite: " + opt.suite);
}

std::string bench_csv_header() {
  return "n,m_mean,k,alpha_hat,algorithm,trials,rounds_mean,rounds_max,iterations_max,scan_ops,"
         "ratio_max_over_small_instances,violations";
}

std::string bench_csv_row(const BenchRow& r) {
  return std::to_string(r.n) + "," + fmt(r.m_mean) + "," + std::to_string(r.k) + "," + std::to_string(r.alpha_hat) +
         "," + r.algorithm + "," + std::to_string(r.trials) + "," + fmt(r.rounds_mean) + "," +
         std::to_string(r.rounds_max) + "," + std::to_string(r.iterations_max) + "," + fmt(r.scan_ops_mean) + "," +
         (r.ratio_max ? fmt(*r.ratio_max) : std::string("NA")) + "," + std::to_string(r.violations);
}

}  // namespace domset
