#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kdclub/graph.hpp"

namespace kdclub::testing {

struct CorpusEntry {
  Graph graph;
  std::size_t k = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
};

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed, const GraphOptions& options = {}) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::build(n, edges, options);
}

/// Random G(n, p) graphs with n in [min_n, max_n], cycling through the
/// densities {0.3, 0.5, 0.8} and budgets {0, 1, 2, 3, 5}.
inline std::vector<CorpusEntry> corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                       std::uint64_t base_seed = 20240601) {
  static constexpr std::array densities{0.3, 0.5, 0.8};
  static constexpr std::array budgets{std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{5}};
  std::mt19937_64 rng(base_seed);
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = min_n + rng() % (max_n - min_n + 1);
    const double p = densities[i % densities.size()];
    const std::size_t k = budgets[(i / densities.size()) % budgets.size()];
    const std::uint64_t seed = rng();
    out.push_back({random_graph(n, p, seed), k, p, seed});
  }
  return out;
}

/// The seven-vertex example graph: v0 sees v1..v5 but not v6, the pairs
/// v1-v4 and v3-v5 are the only non-edges inside {v1..v5}, and v6 sees
/// v1..v5.
inline Graph seven_vertex_example() {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= 5; ++v) edges.emplace_back(0, v);
  for (Vertex u = 1; u <= 5; ++u)
    for (Vertex v = u + 1; v <= 5; ++v)
      if (!((u == 1 && v == 4) || (u == 3 && v == 5))) edges.emplace_back(u, v);
  for (Vertex v = 1; v <= 5; ++v) edges.emplace_back(v, 6);
  return Graph::build(7, edges);
}

inline VertexSet all_but(const Graph& g, const VertexSet& excluded) {
  VertexSet out;
  for (Vertex v : g.active_vertices()) {
    bool skip = false;
    for (Vertex x : excluded) skip = skip || x == v;
    if (!skip) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kdclub::testing
