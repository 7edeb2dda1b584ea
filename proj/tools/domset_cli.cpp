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

// Command-line front end: gen, solve, simulate, validate, bench, check-trace.
//
// Exit codes: 0 ok, 1 invalid input, 2 validation failed, 3 invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "domset/bench.hpp"
#include "domset/central.hpp"
#include "domset/degeneracy.hpp"
#include "domset/dist/protocol.hpp"
#include "domset/dist/trace_check.hpp"
#include "domset/exact.hpp"
#include "domset/generators.hpp"
#include "domset/graph.hpp"
#include "domset/sim/message.hpp"

namespace {

using namespace domset;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitValidationFailed = 2;
constexpr int kExitInvariant = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string input;
  std::string gen;
  std::optional<std::uint64_t> graph_seed;

  void add_to(CLI::App* cmd) {
    auto* in = cmd->add_option("--input,-i", input, "Edge-list file");
    auto* g = cmd->add_option("--gen", gen, "Generator spec, e.g. forest-union:1000:3");
    in->excludes(g);
    cmd->add_option("--graph-seed", graph_seed, "Seed for --gen (default: --seed)");
  }

  Graph load(std::uint64_t seed) const {
    if (input.empty() == gen.empty()) throw InputError("give exactly one of --input or --gen");
    if (!gen.empty()) return GeneratorSpec::parse(gen).build(graph_seed.value_or(seed));
    std::ifstream f(input);
    if (!f) throw InputError("cannot open " + input);
    return parse_edge_list(f);
  }
};

struct Output {
  std::string path;
  std::string format = "json";

  void add_to(CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--out,-o", path, "Output file (default: stdout)");
    if (with_format) cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
  }
};

std::vector<VertexId> read_set(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::vector<VertexId> set;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    long long v = 0;
    if (!(ss >> v)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InputError(path + ":" + std::to_string(lineno) + ": expected a vertex id");
    }
    std::string rest;
    if (v < 0 || (ss >> rest)) throw InputError(path + ":" + std::to_string(lineno) + ": expected a vertex id");
    set.push_back(static_cast<VertexId>(v));
  }
  return set;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out + "\n";
}

std::string num(double x) {
  std::ostringstream ss;
  ss.precision(6);
  ss << x;
  return ss.str();
}

// Ratio against the exact optimum when it can be computed, else the proven factor.
struct Quality {
  std::optional<std::size_t> opt;
  std::optional<double> ratio;
  double bound = 0;

  void to(Json& j) const {
    if (opt) {
      j["opt"] = *opt;
      j["ratio"] = *ratio;
    } else {
      j["opt"] = nullptr;
      j["bound"] = bound;
    }
  }
  std::string cell() const { return ratio ? num(*ratio) : "bound:" + num(bound); }
};

Quality assess(std::size_t size, const std::optional<std::size_t>& opt, double bound) {
  Quality q;
  q.bound = bound;
  if (opt) {
    q.opt = opt;
    q.ratio = *opt == 0 ? 1.0 : static_cast<double>(size) / static_cast<double>(*opt);
  }
  return q;
}

std::optional<std::size_t> optimum(const Graph& g, std::uint64_t budget) {
  if (budget == 0) return std::nullopt;
  auto out = solve_exact(g, budget);
  if (!out.result) return std::nullopt;
  return out.result->opt_size;
}

// ---------------------------------------------------------------------------

int cmd_gen(const std::string& spec, std::uint64_t seed, const Output& out) {
  out.write(write_edge_list(GeneratorSpec::parse(spec).build(seed)));
  return kExitOk;
}

struct SolveArgs {
  GraphSource src;
  Output out;
  std::string algo = "central";
  std::optional<std::size_t> alpha;
  std::size_t delta = 2;
  std::uint64_t seed = 0;
  bool debug = false;
  std::uint64_t exact_budget = kDefaultExactBudget;
};

int cmd_solve(const SolveArgs& a) {
  Graph g = a.src.load(a.seed);
  const std::size_t alpha = a.alpha.value_or(degeneracy_peel(g).alpha_hat);
  Json j;
  j["algo"] = a.algo;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  DominatingSetResult r;
  double bound = 0;
  std::optional<std::size_t> opt;
  if (a.algo == "central") {
    CentralOptions co;
    co.alpha_hat = alpha;
    co.delta = a.delta;
    co.debug_invariants = a.debug;
    r = solve_central(g, co);
    bound = 4.0 * static_cast<double>(a.delta * alpha);
    opt = optimum(g, a.exact_budget);
  } else if (a.algo == "greedy") {
    r = solve_greedy(g);
    bound = 1.0 + std::log(static_cast<double>(g.max_degree()) + 1.0);
    opt = optimum(g, a.exact_budget);
  } else {
    auto ex = solve_exact(g, a.exact_budget);
    if (!ex.result) {
      j["error"] = "exact search budget exceeded";
      j["nodes_explored"] = ex.nodes_explored;
      a.out.write(j.dump(2) + "\n");
      return kExitValidationFailed;
    }
    r.dset = ex.result->witness;
    opt = ex.result->opt_size;
    bound = 1.0;
    j["nodes_explored"] = ex.nodes_explored;
  }
  const Quality q = assess(r.dset.size(), opt, bound);
  const bool ok = validate_dominating(g, r.dset).dominating;
  if (a.out.format == "csv") {
    a.out.write(csv_line({"algo", "n", "m", "alpha_hat", "threshold", "dset_size", "scan_ops", "ratio", "dominating"}) +
                csv_line({a.algo, std::to_string(g.num_vertices()), std::to_string(g.num_edges()),
                          std::to_string(alpha), std::to_string(r.threshold), std::to_string(r.dset.size()),
                          std::to_string(r.scan_ops), q.cell(), ok ? "true" : "false"}));
  } else {
    j["alpha_hat"] = alpha;
    j["delta"] = a.delta;
    j["threshold"] = r.threshold;
    j["dset_size"] = r.dset.size();
    j["scan_ops"] = r.scan_ops;
    j["iterations"] = r.iterations;
    q.to(j);
    j["dominating"] = ok;
    j["dset"] = r.dset;
    a.out.write(j.dump(2) + "\n");
  }
  return ok ? kExitOk : kExitValidationFailed;
}

struct SimulateArgs {
  GraphSource src;
  Output out;
  std::string algo = "fast";
  std::string mis = "sequential";
  std::size_t mis_rounds = 0;
  std::optional<std::size_t> alpha;
  std::size_t delta = 4;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::size_t budget = 0;
  std::size_t wrapper_constant = 64;
  bool debug = false;
  std::string trace;
  std::uint64_t exact_budget = 1'000'000;
};

int cmd_simulate(const SimulateArgs& a) {
  Graph g = a.src.load(a.seed);
  const std::size_t alpha = a.alpha.value_or(degeneracy_peel(g).alpha_hat);
  const bool wrapped = a.algo == "fast-unknown-alpha";
  auto algo = dist::algo_from_name(wrapped ? "fast" : a.algo);
  if (!algo) throw InputError("unknown --algo " + a.algo);
  dist::DistConfig cfg;
  cfg.algo = *algo;
  cfg.alpha_hat = alpha;
  cfg.delta = a.delta;
  cfg.recount_degrees = a.debug;
  cfg.wrapper_constant = a.wrapper_constant;
  cfg.mis_rounds = a.mis_rounds;
  if (cfg.algo == dist::Algo::kLocalMis) cfg.mis_provider = dist::make_mis_provider(a.mis);
  if (wrapped) cfg = dist::unknown_alpha_wrapper(cfg);
  if (!a.trace.empty() && a.trials != 1) throw InputError("--trace needs --trials 1");

  const auto opt = optimum(g, a.exact_budget);
  const double rounded = wrapped ? static_cast<double>(std::size_t{1} << sim::ceil_log2(alpha)) : static_cast<double>(alpha);
  const double bound = 2.0 * 4.0 * static_cast<double>(a.delta) * rounded * (wrapped ? 2.0 : 1.0);

  int code = kExitOk;
  Json rows = Json::array();
  std::string csv = csv_line({"seed", "rounds", "iterations", "dset_size", "ratio", "max_message_bits", "violations",
                              "terminated", "dominating"});
  Json single;
  for (std::size_t t = 0; t < a.trials; ++t) {
    const std::uint64_t seed = a.seed + t;
    std::ofstream trace_file;
    dist::DistRunOptions ro;
    ro.seed = seed;
    ro.round_budget = a.budget;
    if (!a.trace.empty()) {
      trace_file.open(a.trace);
      if (!trace_file) throw InputError("cannot write " + a.trace);
      ro.trace = &trace_file;
    }
    sim::SimReport r = dist::run_distributed(g, cfg, ro);
    const bool dominating = validate_dominating(g, r.dset).dominating;
    const Quality q = assess(r.dset.size(), opt, bound);
    if (!r.violations.empty()) {
      code = kExitInvariant;
    } else if ((!dominating || !r.terminated) && code == kExitOk) {
      code = kExitValidationFailed;
    }
    csv += csv_line({std::to_string(seed), std::to_string(r.rounds), std::to_string(r.iterations),
                     std::to_string(r.dset.size()), q.cell(), std::to_string(r.max_message_bits),
                     std::to_string(r.violations.size()), r.terminated ? "true" : "false",
                     dominating ? "true" : "false"});
    Json row;
    row["seed"] = seed;
    row["rounds"] = r.rounds;
    row["iterations"] = r.iterations;
    row["dset_size"] = r.dset.size();
    q.to(row);
    row["max_message_bits"] = r.max_message_bits;
    row["violations"] = r.violations;
    row["terminated"] = r.terminated;
    row["dominating"] = dominating;
    rows.push_back(row);
    if (a.trials == 1) {
      single = sim::to_json(r);
      q.to(single);
      single["dominating"] = dominating;
    }
  }
  if (a.out.format == "csv") {
    a.out.write(csv);
  } else if (a.trials == 1) {
    a.out.write(single.dump(2) + "\n");
  } else {
    Json j;
    j["algo"] = a.algo;
    j["n"] = g.num_vertices();
    j["alpha_hat"] = alpha;
    j["trials"] = rows;
    a.out.write(j.dump(2) + "\n");
  }
  return code;
}

int cmd_validate(const std::string& graph_path, const std::string& set_path, const Output& out) {
  std::ifstream f(graph_path);
  if (!f) throw InputError("cannot open " + graph_path);
  Graph g = parse_edge_list(f);
  const auto set = read_set(set_path);
  const Coverage c = validate_dominating(g, set);
  Json j;
  j["dominating"] = c.dominating;
  if (c.first_uncovered) {
    j["first_uncovered"] = *c.first_uncovered;
  } else {
    j["first_uncovered"] = nullptr;
  }
  out.write(j.dump() + "\n");
  return c.dominating ? kExitOk : kExitValidationFailed;
}

int cmd_bench(const BenchOptions& opt, const Output& out) {
  const auto rows = run_bench(opt);
  std::size_t violations = 0;
  if (out.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["n"] = r.n;
      j["m_mean"] = r.m_mean;
      j["k"] = r.k;
      j["alpha_hat"] = r.alpha_hat;
      j["algorithm"] = r.algorithm;
      j["trials"] = r.trials;
      j["rounds_mean"] = r.rounds_mean;
      j["rounds_max"] = r.rounds_max;
      j["iterations_max"] = r.iterations_max;
      j["scan_ops"] = r.scan_ops_mean;
      if (r.ratio_max) {
        j["ratio_max_over_small_instances"] = *r.ratio_max;
      } else {
        j["ratio_max_over_small_instances"] = nullptr;
      }
      j["violations"] = r.violations;
      arr.push_back(j);
      violations += r.violations;
    }
    out.write(arr.dump(2) + "\n");
  } else {
    std::string csv = bench_csv_header() + "\n";
    for (const auto& r : rows) {
      csv += bench_csv_row(r) + "\n";
      violations += r.violations;
    }
    out.write(csv);
  }
  return violations ? kExitInvariant : kExitOk;
}

int cmd_check_trace(const GraphSource& src, std::uint64_t seed, const std::string& trace_path, const Output& out) {
  Graph g = src.load(seed);
  std::ifstream f(trace_path);
  if (!f) throw InputError("cannot open " + trace_path);
  auto r = dist::check_trace(f, g);
  Json j;
  j["rounds"] = r.rounds;
  j["iterations"] = r.iterations;
  j["mis_checks"] = r.mis_checks;
  j["dset_size"] = r.dset.size();
  j["violations"] = r.violations;
  out.write(j.dump(2) + "\n");
  return r.ok() ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominating sets in bounded-arboricity graphs: solvers, simulator, benchmarks"};
  app.require_subcommand(1);

  std::string gen_spec;
  std::uint64_t gen_seed = 0;
  Output gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("spec", gen_spec, "star:N | path:N | cycle:N | grid:RxC | gnm:N:M | forest-union:N:K | ...")
      ->required();
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen_out.add_to(gen, false);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Run a centralized solver");
  solve_args.src.add_to(solve);
  solve_args.out.add_to(solve);
  solve->add_option("--algo", solve_args.algo, "central | greedy | exact")
      ->check(CLI::IsMember({"central", "greedy", "exact"}));
  solve->add_option("--alpha", solve_args.alpha, "Arboricity bound (default: degeneracy)");
  solve->add_option("--delta", solve_args.delta, "Threshold multiplier");
  solve->add_option("--seed", solve_args.seed, "Seed for --gen");
  solve->add_flag("--debug-invariants", solve_args.debug, "Recount the partition after every iteration");
  solve->add_option("--exact-budget", solve_args.exact_budget, "Branch-and-bound node budget (0 disables OPT)");

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Run a distributed protocol in the round simulator");
  sim_args.src.add_to(simulate);
  sim_args.out.add_to(simulate);
  simulate->add_option("--algo", sim_args.algo, "local-mis | congest-mis | fast | fast-unknown-alpha")
      ->check(CLI::IsMember({"local-mis", "congest-mis", "fast", "fast-unknown-alpha"}));
  simulate->add_option("--mis", sim_args.mis, "MIS provider for local-mis")
      ->check(CLI::IsMember({"sequential", "luby"}));
  simulate->add_option("--mis-rounds", sim_args.mis_rounds, "Rounds charged per MIS call (0: provider default)");
  simulate->add_option("--alpha", sim_args.alpha, "Arboricity bound (default: degeneracy)");
  simulate->add_option("--delta", sim_args.delta, "Threshold multiplier");
  simulate->add_option("--seed", sim_args.seed, "Base seed; trial i uses seed + i");
  simulate->add_option("--trials", sim_args.trials, "Number of runs")->check(CLI::PositiveNumber);
  simulate->add_option("--budget", sim_args.budget, "Round budget (0: protocol default)");
  simulate->add_option("--wrapper-constant", sim_args.wrapper_constant, "C_w in the unknown-alpha phase lengths");
  simulate->add_flag("--debug-invariants", sim_args.debug, "Recount degree counters every iteration");
  simulate->add_option("--trace", sim_args.trace, "Write a line-delimited JSON trace (single trial)");
  simulate->add_option("--exact-budget", sim_args.exact_budget, "Node budget for the OPT used in ratios");

  std::string val_graph, val_set;
  Output val_out;
  auto* validate = app.add_subcommand("validate", "Check that a vertex set dominates a graph");
  validate->add_option("graph", val_graph, "Edge-list file")->required();
  validate->add_option("set", val_set, "Vertex-set file, one id per line")->required();
  val_out.add_to(validate, false);

  BenchOptions bench_opt;
  Output bench_out;
  bench_out.format = "csv";
  auto* bench = app.add_subcommand("bench", "Run a benchmark sweep");
  bench->add_option("suite", bench_opt.suite, "central-linear | fast-rounds | mis-rounds | ratio")
      ->required()
      ->check(CLI::IsMember({"central-linear", "fast-rounds", "mis-rounds", "ratio"}));
  bench->add_option("--grid-min", bench_opt.grid_min, "Smallest log2 n (n for ratio)");
  bench->add_option("--grid-max", bench_opt.grid_max, "Largest log2 n (n for ratio)");
  bench->add_option("--seeds", bench_opt.seeds, "Seeds per grid cell");
  bench->add_option("--k", bench_opt.k, "Forests in the forest-union generator");
  bench->add_option("--seed", bench_opt.seed, "Base seed");
  bench_out.add_to(bench);

  GraphSource trace_src;
  std::string trace_path;
  std::uint64_t trace_seed = 0;
  Output trace_out;
  auto* check = app.add_subcommand("check-trace", "Replay a simulation trace and check its invariants");
  trace_src.add_to(check);
  check->add_option("--trace", trace_path, "Trace file")->required();
  check->add_option("--seed", trace_seed, "Seed for --gen");
  trace_out.add_to(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*gen) return cmd_gen(gen_spec, gen_seed, gen_out);
    if (*solve) return cmd_solve(solve_args);
    if (*simulate) return cmd_simulate(sim_args);
    if (*validate) return cmd_validate(val_graph, val_set, val_out);
    if (*bench) return cmd_bench(bench_opt, bench_out);
    if (*check) return cmd_check_trace(trace_src, trace_seed, trace_path, trace_out);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
