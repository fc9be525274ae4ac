#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "kdclub/graph.hpp"
#include "kdclub/reduce.hpp"

namespace kdclub {

struct SolverConfig {
  std::size_t k = 1;
  /// Wall-clock budget in seconds for the whole solve.
  double time_limit = 1800.0;
  /// 0 keeps the lowest-id tie-break for branching; any other value
  /// shuffles ties reproducibly.
  std::uint64_t seed = 0;
  bool club_in_preprocess = true;
  bool club_in_bnb = true;
  /// Also drop candidates whose KDBB vertex bound is <= LB at every node.
  bool node_bound_reduction = false;
  double density_threshold = 0.05;
  std::optional<std::size_t> edge_club_budget;
  bool trace = false;

  void validate() const;
  /// Stable summary of the settings that influence the result.
  std::string fingerprint() const;
};

enum class SolveStatus { optimal, timeout };
std::string to_string(SolveStatus status);

struct SolveResult {
  std::size_t best_size = 0;
  /// Vertex ids of the input graph, ascending.
  VertexSet witness;
  SolveStatus status = SolveStatus::optimal;
  std::uint64_t tree_nodes = 0;
  double preprocess_time = 0.0;
  double total_time = 0.0;
  std::size_t lower_bound_size = 0;
  std::size_t reduced_vertices = 0;
  std::size_t reduced_edges = 0;
  ReductionStats reduction;
};

struct LowerBound {
  std::size_t size = 0;
  VertexSet witness;
};

/// Greedy lower bound: from each of the 16 vertices that come last in a
/// degeneracy ordering, repeatedly add the feasible candidate with the most
/// neighbors among the remaining candidates.
LowerBound fast_lb(const Graph& g, std::size_t k);

/// Partial solution inside a search.
struct SearchNode {
  VertexSet s;
  std::size_t missing_in_s = 0;
};

/// Removes every active vertex u outside S with S ∪ {u} infeasible and every
/// edge (u, w) between such vertices with S ∪ {u, w} infeasible.
/// Returns the number of vertices and edges removed.
std::size_t node_reduction(Graph& g, std::size_t k, const SearchNode& node);

/// Reported at every node whose bound fails to beat the incumbent; the
/// graph is the node's reduced graph and S its partial solution.
struct PruneEvent {
  const Graph& graph;
  std::span<const Vertex> s;
  std::size_t bound;
  std::size_t lower_bound;
};
using PruneObserver = std::function<void(const PruneEvent&)>;

struct BnbOutcome {
  std::size_t best_size = 0;
  VertexSet witness;
  std::uint64_t tree_nodes = 0;
  bool timed_out = false;
};

/// Branch and bound below `start`. Every vertex of `start.s` must be active
/// and start.s must be feasible. `lb` is a size already known to be
/// achievable (its witness is not needed); the outcome witness is empty when
/// nothing larger is found.
BnbOutcome bnb(Graph& g, const SolverConfig& config, const SearchNode& start, std::size_t lb,
               const PruneObserver& observer = {});

/// Lower bound, preprocessing, then branch and bound on the reduced graph.
SolveResult solve(const Graph& g, const SolverConfig& config, const PruneObserver& observer = {});

}  // namespace kdclub
