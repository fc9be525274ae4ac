#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kdclub/graph.hpp"

namespace kdclub {

/// Minimum number of missing edges among any t vertices drawn from r
/// independent sets: the vertices are spread as evenly as possible, so
/// c = t mod r sets hold d+1 of them and the rest hold d = t / r.
std::uint64_t staircase_increment(std::uint64_t r, std::uint64_t t);

/// Candidates grouped by how many vertices of S they are not adjacent to.
/// classes[i] holds the candidates with exactly i non-neighbors in S
/// (ascending ids); candidates with more than k land in `dropped`.
struct DeficiencyPartition {
  std::vector<VertexSet> classes;
  VertexSet dropped;
  /// Greedy color count of each class; 0 until colored (and for empty classes).
  std::vector<std::size_t> color_counts;
};

/// Per-bucket vertex counts. A vertex in bucket l adds at least l missing
/// edges when candidates are taken cheapest bucket first.
struct CostBuckets {
  std::vector<std::size_t> counts;
  /// Filled only when requested; chunk membership is an arbitrary
  /// deterministic choice (ascending ids) since only sizes matter.
  std::vector<VertexSet> members;

  std::size_t total() const;
};

struct Coloring {
  std::size_t count = 0;
  std::vector<VertexSet> classes;
};

DeficiencyPartition partition_by_deficiency(const Graph& g, std::span<const Vertex> s,
                                            std::span<const Vertex> c, std::size_t k);

/// Sequential greedy coloring of G[vertices]. Vertices are visited by
/// non-increasing degree inside G[vertices], ties by ascending id, and each
/// takes the smallest color not used by an already colored neighbor.
Coloring greedy_color(const Graph& g, std::span<const Vertex> vertices);

/// Peels each class into chunks of r_i vertices; chunk j of class i goes to
/// bucket j-1+i. Requires color_counts to be filled for non-empty classes.
CostBuckets extract_buckets(const DeficiencyPartition& partition, std::size_t k, bool keep_members = false);

CostBuckets extract(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c,
                    bool keep_members = false);

/// Largest x such that the x cheapest bucketed vertices cost at most kappa.
std::size_t affordable_extension(const CostBuckets& buckets, std::size_t kappa);

/// Coloring-based upper bound on the largest k-defective clique W with
/// S ⊆ W ⊆ S ∪ C. S must be a k-defective clique and disjoint from C.
std::size_t club(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c);

/// The same bound with every deficiency class treated as a clique
/// (one color per vertex). This is the node bound of the KDBB baseline.
std::size_t clique_class_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c);

/// |S ∪ {v}| + |N(v) ∩ C| + min(rem, |C \ N[v]|), rem = k - missing(S ∪ {v}).
/// Returns |S| + 1 when S ∪ {v} is already infeasible.
std::size_t kdbb_vertex_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c,
                              Vertex v);
/// C defaults to every active vertex outside S.
std::size_t kdbb_vertex_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, Vertex v);

/// |S ∪ {u,v}| + |N(u,v) ∩ C| + min(rem, |C \ N[u,v]|). Returns |S| + 1 when
/// no feasible set contains S ∪ {u,v}.
std::size_t kdbb_edge_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c,
                            Vertex u, Vertex v);
std::size_t kdbb_edge_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, Vertex u, Vertex v);

/// Reusable scratch space for repeated bound evaluations on one graph.
/// Not thread-safe; use one per worker.
class BoundEngine {
 public:
  std::size_t color_count(const Graph& g, std::span<const Vertex> vertices);
  Coloring color(const Graph& g, std::span<const Vertex> vertices);

  /// Bound from candidates already grouped by deficiency (classes[i] has
  /// deficiency i). With `use_coloring` false every class counts as a clique.
  std::size_t bound_from_classes(const Graph& g, std::size_t k, std::size_t s_size, std::size_t kappa,
                                 std::span<const VertexSet> classes, bool use_coloring);

  /// Bound from class sizes and their color counts alone.
  std::size_t bound_from_sizes(std::size_t k, std::size_t s_size, std::size_t kappa,
                               std::span<const std::size_t> sizes, std::span<const std::size_t> colors);

 private:
  void order_by_inner_degree(const Graph& g, std::span<const Vertex> vertices);
  std::size_t run_greedy(const Graph& g, std::vector<int>* color_out);

  std::vector<Vertex> order_;
  std::vector<std::size_t> inner_degree_;
  std::vector<bits::Word> member_bits_;
  std::vector<bits::Word> color_bits_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<int> color_of_;
  std::vector<std::uint32_t> color_seen_;
  std::uint32_t color_epoch_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> colors_;
};

}  // namespace kdclub
