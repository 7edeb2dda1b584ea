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

#include "domset/generators.hpp"

#include <sstream>
#include <unordered_set>

#include "domset/random.hpp"

namespace domset {

std::vector<Edge> random_tree_edges(std::size_t n, std::uint64_t seed) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  edges.reserve(n - 1);
  if (n == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  Rng rng(seed);
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = static_cast<VertexId>(rng.below(n));

  // Linear-time Prüfer decoding.
  std::vector<std::size_t> degree(n, 1);
  for (VertexId c : code) ++degree[c];
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (VertexId c : code) {
    edges.emplace_back(static_cast<VertexId>(leaf), c);
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<VertexId>(leaf), static_cast<VertexId>(n - 1));
  return edges;
}

Graph gen_forest_union(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 1) throw GeneratorError("forest-union requires n >= 1");
  if (k < 1) throw GeneratorError("forest-union requires k >= 1");
  std::vector<Edge> all;
  all.reserve(k * (n > 0 ? n - 1 : 0));
  for (std::size_t t = 0; t < k; ++t) {
    auto tree = random_tree_edges(n, splitmix64(seed ^ splitmix64(t + 1)));
    all.insert(all.end(), tree.begin(), tree.end());
  }
  return Graph::from_edges(n, all);
}

Graph gen_path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::from_edges(n, e);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw GeneratorError("cycle requires n >= 3");
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph gen_star(std::size_t n) {
  if (n < 1) throw GeneratorError("star requires n >= 1");
  std::vector<Edge> e;
  for (std::size_t v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph::from_edges(n, e);
}

Graph gen_grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::from_edges(rows * cols, e);
}

Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t total = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > total) {
    throw GeneratorError("gnm: m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(total));
  }
  // Floyd's sampling over edge indices, then decode index -> (u, v).
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> order;
  order.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    std::uint64_t t = rng.below(j + 1);
    if (chosen.insert(t).second) {
      order.push_back(t);
    } else {
      chosen.insert(j);
      order.push_back(j);
    }
  }
  std::vector<Edge> e;
  e.reserve(m);
  for (std::uint64_t idx : order) {
    // Row u holds pairs (u, u+1..n-1); find u with prefix(u) <= idx < prefix(u+1).
    std::uint64_t lo = 0;
    std::uint64_t hi = n - 1;
    auto prefix = [n](std::uint64_t u) { return u * (2 * n - u - 1) / 2; };
    while (lo + 1 < hi) {
      std::uint64_t mid = (lo + hi) / 2;
      if (prefix(mid) <= idx) lo = mid; else hi = mid;
    }
    std::uint64_t u = lo;
    std::uint64_t v = u + 1 + (idx - prefix(u));
    e.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return Graph::from_edges(n, e);
}

Graph gen_empty(std::size_t n) { return Graph::from_edges(n, {}); }

Graph gen_complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  GeneratorSpec spec;
  std::stringstream ss(text);
  std::string part;
  bool first = true;
  while (std::getline(ss, part, ':')) {
    if (first) {
      spec.kind = part;
      first = false;
      continue;
    }
    // grid accepts "RxC" as a single field.
    std::stringstream inner(part);
    std::string tok;
    while (std::getline(inner, tok, 'x')) {
      try {
        std::size_t used = 0;
        auto value = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        spec.params.push_back(static_cast<std::size_t>(value));
      } catch (const std::exception&) {
        throw GeneratorError("bad generator parameter '" + tok + "' in '" + text + "'");
      }
    }
  }
  if (spec.kind.empty()) throw GeneratorError("empty generator spec");
  return spec;
}

Graph GeneratorSpec::build(std::uint64_t seed) const {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw GeneratorError(kind + " expects " + std::to_string(count) + " parameter(s), got " +
                           std::to_string(params.size()));
    }
  };
  if (kind == "path") { need(1); return gen_path(params[0]); }
  if (kind == "cycle") { need(1); return gen_cycle(params[0]); }
  if (kind == "star") { need(1); return gen_star(params[0]); }
  if (kind == "grid") { need(2); return gen_grid(params[0], params[1]); }
  if (kind == "gnm") { need(2); return gen_gnm(params[0], params[1], seed); }
  if (kind == "empty") { need(1); return gen_empty(params[0]); }
  if (kind == "complete") { need(1); return gen_complete(params[0]); }
  if (kind == "forest-union") { need(2); return gen_forest_union(params[0], params[1], seed); }
  throw GeneratorError("unknown generator kind '" + kind + "'");
}

std::string GeneratorSpec::to_string() const {
  std::string out = kind;
  for (std::size_t p : params) out += ":" + std::to_string(p);
  return out;
}

}  // namespace domset
