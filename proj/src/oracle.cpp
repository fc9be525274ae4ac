#include "kdclub/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace kdclub {
namespace {

void check_inputs(const Graph& g, std::span<const Vertex> required, std::span<const Vertex> allowed) {
  if (g.active_count() > kOracleMaxVertices)
    throw OracleRefused("oracle refuses graphs with more than " + std::to_string(kOracleMaxVertices) +
                        " active vertices (got " + std::to_string(g.active_count()) + ")");
  for (Vertex v : allowed) expects(g.is_active(v), "oracle: allowed vertex is not active");
  for (Vertex v : required)
    expects(std::find(allowed.begin(), allowed.end(), v) != allowed.end(), "oracle: required must be within allowed");
}

VertexSet all_active(const Graph& g) {
  VertexSet out(g.active_vertices().begin(), g.active_vertices().end());
  std::sort(out.begin(), out.end());
  return out;
}

struct Recursion {
  const Graph& g;
  std::size_t k;
  VertexSet optional;
  VertexSet current;
  OracleResult best;

  void run(std::size_t index, std::size_t missing) {
    ++best.nodes_enumerated;
    if (current.size() > best.size) {
      best.size = current.size();
      best.witness = current;
    }
    if (index == optional.size()) return;
    const Vertex v = optional[index];
    std::size_t added = 0;
    for (Vertex u : current) added += g.adjacent(u, v) ? 0 : 1;
    if (missing + added <= k) {
      current.push_back(v);
      run(index + 1, missing + added);
      current.pop_back();
    }
    run(index + 1, missing);
  }
};

}  // namespace

OracleResult brute_force(const Graph& g, std::size_t k, std::span<const Vertex> required,
                         std::span<const Vertex> allowed) {
  check_inputs(g, required, allowed);
  Recursion rec{g, k, {}, VertexSet(required.begin(), required.end()), {}};
  std::size_t missing = 0;
  for (std::size_t i = 0; i < required.size(); ++i)
    for (std::size_t j = i + 1; j < required.size(); ++j) missing += g.adjacent(required[i], required[j]) ? 0 : 1;
  if (missing > k) return {};
  for (Vertex v : allowed)
    if (std::find(required.begin(), required.end(), v) == required.end()) rec.optional.push_back(v);
  // A feasible `required` is itself a candidate answer, even when empty.
  rec.best.size = required.size();
  rec.best.witness = rec.current;
  rec.run(0, missing);
  std::sort(rec.best.witness.begin(), rec.best.witness.end());
  return rec.best;
}

OracleResult brute_force(const Graph& g, std::size_t k) {
  const VertexSet all = all_active(g);
  return brute_force(g, k, {}, all);
}

OracleResult brute_force_bitmask(const Graph& g, std::size_t k, std::span<const Vertex> required,
                                 std::span<const Vertex> allowed) {
  check_inputs(g, required, allowed);
  const std::size_t m = allowed.size();
  if (m > kBitmaskOracleMaxVertices)
    throw OracleRefused("bitmask oracle handles at most " + std::to_string(kBitmaskOracleMaxVertices) +
                        " allowed vertices");
  std::vector<std::uint32_t> adj(m, 0);
  std::uint32_t required_mask = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && g.adjacent(allowed[i], allowed[j])) adj[i] |= 1U << j;
    if (std::find(required.begin(), required.end(), allowed[i]) != required.end()) required_mask |= 1U << i;
  }
  const std::uint32_t total = 1U << m;
  // edges[mask] = number of edges inside mask, built from mask minus its lowest bit.
  std::vector<std::uint16_t> edges(total, 0);
  OracleResult best;
  bool found = false;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    edges[mask] = static_cast<std::uint16_t>(edges[rest] + std::popcount(adj[low] & rest));
  }
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    ++best.nodes_enumerated;
    if ((mask & required_mask) != required_mask) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t pairs = size * (size == 0 ? 0 : size - 1) / 2;
    if (pairs - edges[mask] > k) continue;
    if (!found || size > best.size) {
      found = true;
      best.size = size;
      best_mask = mask;
    }
  }
  if (!found) return best;
  for (std::size_t i = 0; i < m; ++i)
    if (best_mask >> i & 1U) best.witness.push_back(allowed[i]);
  std::sort(best.witness.begin(), best.witness.end());
  return best;
}

OracleResult brute_force_bitmask(const Graph& g, std::size_t k) {
  const VertexSet all = all_active(g);
  return brute_force_bitmask(g, k, {}, all);
}

}  // namespace kdclub
