#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>

#include "kdclub/bound.hpp"
#include "kdclub/graph.hpp"

namespace kdclub {

struct ReductionStats {
  /// Indexed by rule number 1..4; slot 0 is unused.
  std::array<std::size_t, 5> vertices_removed_by_rule{};
  std::array<std::size_t, 5> edges_removed_by_rule{};
  std::size_t passes = 0;
  std::size_t club_evaluations = 0;
  /// Set when an edge pass ran out of CLUB evaluations and fell back to
  /// Rule 2 alone; the result is then safe but not necessarily a fixed point.
  bool edge_budget_exhausted = false;
  double elapsed_seconds = 0.0;

  std::size_t vertices_removed() const;
  std::size_t edges_removed() const;
};

struct ReduceOptions {
  bool use_club = true;
  /// Maximum Rule 4 evaluations per edge pass; unlimited when empty.
  std::optional<std::size_t> edge_club_budget;
  /// Optional clique of the input graph (e.g. taken from the lower-bound
  /// witness). It lets Rules 3 and 4 skip coloring the vertices adjacent to
  /// no seed vertex when the clique alone forces the bound's value.
  VertexSet clique_hint;
};

/// Deletes vertices and edges that cannot belong to a k-defective clique
/// larger than `lb`, until no rule applies. The graph is modified in place
/// through its journal.
ReductionStats preprocess(Graph& g, std::size_t k, std::size_t lb, const ReduceOptions& options = {});

/// One queue-driven vertex sweep: Rule 1, then Rule 3 if `use_club`.
/// Neighbors of a removed vertex are queued again. Returns removals.
std::size_t check_vertices(Graph& g, std::size_t k, std::size_t lb, bool use_club, ReductionStats* stats = nullptr);

/// One queue-driven edge sweep: Rule 2, then Rule 4 if `use_club`. Edges
/// sharing an endpoint with a removed edge are queued again.
std::size_t check_edges(Graph& g, std::size_t k, std::size_t lb, bool use_club, ReductionStats* stats = nullptr,
                        std::optional<std::size_t> club_budget = std::nullopt);

/// CLUB with S = seed (one vertex, or the two endpoints of an edge) and
/// C = every other active vertex, as the reduction rules evaluate it.
std::size_t seed_club(const Graph& g, std::size_t k, std::span<const Vertex> seed,
                      std::span<const Vertex> clique_hint = {});

}  // namespace kdclub
