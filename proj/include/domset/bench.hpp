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
#include <string>
#include <string_view>
#include <vector>

namespace domset {

/// One CSV row of a benchmark sweep. Aggregates are over the seeds of one
/// (n, k, algorithm) cell.
struct BenchRow {
  std::size_t n = 0;
  double m_mean = 0;
  std::size_t k = 0;
  std::size_t alpha_hat = 0;  // max over seeds
  std::string algorithm;
  std::size_t trials = 0;
  double rounds_mean = 0;
  std::size_t rounds_max = 0;
  std::size_t iterations_max = 0;
  double scan_ops_mean = 0;
  std::optional<double> ratio_max;  // only for cells whose OPT was computed
  std::size_t violations = 0;
};

struct BenchOptions {
  std::string suite;               // central-linear | fast-rounds | mis-rounds | ratio
  // Grid bounds: log2 n for the scaling suites, n itself for `ratio`.
  std::optional<std::size_t> grid_min;
  std::optional<std::size_t> grid_max;
  std::optional<std::size_t> seeds;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
};

/// Suites and their default grids:
///   central-linear  n = 2^12..2^18, k = 4, 3 seeds, centralized solver
///   fast-rounds     n = 2^10..2^16, k = 2, 32 seeds, fast protocol
///   mis-rounds      n = 2^10..2^16, k = 2, 32 seeds, congest-mis protocol
///   ratio           n = 4..16, k = 1,2,4,8, 20 seeds, every algorithm vs the exact optimum
/// Throws std::invalid_argument for an unknown suite.
std::vector<BenchRow> run_bench(const BenchOptions& opt);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace domset
