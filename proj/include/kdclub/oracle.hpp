#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "kdclub/graph.hpp"

namespace kdclub {

// Exhaustive reference solvers. They use nothing but adjacency tests so they
// stay independent of the bounds and reductions they are used to check.

inline constexpr std::size_t kOracleMaxVertices = 24;
inline constexpr std::size_t kBitmaskOracleMaxVertices = 20;

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  /// 0 with an empty witness when no feasible W exists (required itself is
  /// not a k-defective clique).
  std::size_t size = 0;
  VertexSet witness;
  std::uint64_t nodes_enumerated = 0;
};

/// Largest W with required ⊆ W ⊆ allowed and at most k missing edges, by
/// include/exclude recursion with only the feasibility cut. Refuses graphs
/// with more than kOracleMaxVertices active vertices.
OracleResult brute_force(const Graph& g, std::size_t k, std::span<const Vertex> required,
                         std::span<const Vertex> allowed);
OracleResult brute_force(const Graph& g, std::size_t k);

/// Same contract, by sweeping every subset of `allowed` (at most
/// kBitmaskOracleMaxVertices of them).
OracleResult brute_force_bitmask(const Graph& g, std::size_t k, std::span<const Vertex> required,
                                 std::span<const Vertex> allowed);
OracleResult brute_force_bitmask(const Graph& g, std::size_t k);

}  // namespace kdclub
