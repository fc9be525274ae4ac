#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kdclub/bitset.hpp"
#include "kdclub/errors.hpp"

namespace kdclub {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

enum class Representation { automatic, dense, sparse };

struct GraphOptions {
  /// Bitset adjacency is used when density reaches this value and the graph
  /// has at most `dense_max_vertices` vertices.
  double density_threshold = 0.05;
  std::size_t dense_max_vertices = 50'000;
  Representation representation = Representation::automatic;
};

/// Position in the mutation journal. Rolling back to it undoes every
/// deletion applied after it was taken.
struct Checkpoint {
  std::size_t journal_size = 0;
};

/// Undirected simple graph with logical, journaled deletion.
///
/// Vertex ids are stable for the lifetime of the object. Removing a vertex
/// hides it and all its incident edges; removing an edge hides only that
/// edge. Both are recorded in the journal so `rollback` restores the exact
/// prior state in time proportional to the number of undone changes.
///
/// Dense graphs keep one adjacency bitset row per vertex; sparse graphs keep
/// incidence lists plus a hash index for adjacency tests.
class Graph {
 public:
  Graph() = default;

  /// Drops self-loops and duplicate pairs. Throws InputError on ids >= n.
  static Graph build(std::size_t n, std::span<const Edge> edges, const GraphOptions& options = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t active_count() const noexcept { return active_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool is_dense() const noexcept { return dense_; }
  double density() const noexcept;

  bool is_active(Vertex v) const { return v < n_ && active_flag_[v]; }
  std::size_t degree(Vertex v) const {
    expects(is_active(v), "degree of inactive vertex");
    return degree_[v];
  }
  bool adjacent(Vertex u, Vertex v) const;

  /// Active vertices in an order that is restored exactly by rollback.
  std::span<const Vertex> active_vertices() const {
    return {order_.data(), active_count_};
  }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const;

  VertexSet neighbors(Vertex v) const;
  /// Active edges with u < v, sorted.
  std::vector<Edge> edges() const;

  // Bitset views, valid only for dense graphs. Rows are not masked by the
  // active set; combine with active_mask().
  std::size_t words() const noexcept { return words_; }
  std::span<const bits::Word> row(Vertex v) const {
    return {matrix_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::span<const bits::Word> active_mask() const noexcept { return active_bits_; }

  void remove_vertex(Vertex v);
  void remove_edge(Vertex u, Vertex v);
  Checkpoint checkpoint() const noexcept { return {journal_.size()}; }
  void rollback(Checkpoint cp);
  std::size_t journal_size() const noexcept { return journal_.size(); }

  /// Compares everything observable (active set and its order, degrees,
  /// live adjacency, edge count); ignores the journal.
  friend bool same_structure(const Graph& a, const Graph& b);

 private:
  struct Incidence {
    Vertex to;
    std::uint32_t edge;
  };
  struct JournalEntry {
    bool is_vertex;
    Vertex u;
    Vertex v;
    std::uint32_t edge;
  };

  static std::uint64_t key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  std::span<bits::Word> mutable_row(Vertex v) {
    return {matrix_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  // Ignores the active flags of the endpoints.
  bool edge_live(Vertex u, Vertex v, std::uint32_t* edge_id = nullptr) const;
  void deactivate(Vertex v);

  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  bool dense_ = false;
  std::size_t words_ = 0;

  std::vector<std::uint32_t> degree_;
  std::vector<char> active_flag_;
  std::vector<bits::Word> active_bits_;
  std::vector<Vertex> order_;
  std::vector<Vertex> pos_;
  std::size_t active_count_ = 0;

  std::vector<bits::Word> matrix_;

  std::vector<std::vector<Incidence>> adj_;
  std::vector<char> edge_alive_;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_index_;

  std::vector<JournalEntry> journal_;
};

template <class F>
void Graph::for_each_neighbor(Vertex v, F&& f) const {
  expects(is_active(v), "neighbors of inactive vertex");
  if (dense_) {
    bits::for_each_and(row(v), active_mask(), [&](std::size_t w) { f(static_cast<Vertex>(w)); });
    return;
  }
  for (const Incidence& inc : adj_[v])
    if (edge_alive_[inc.edge] && active_flag_[inc.to]) f(inc.to);
}

/// Number of vertex pairs inside `s` that are not edges of `g`.
std::size_t missing_edges(const Graph& g, std::span<const Vertex> s);

/// Active common neighbors of u and v, ascending.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

/// Active subgraph renumbered to 0..active_count-1, keeping the original id
/// of every new vertex.
struct CompactGraph {
  Graph graph;
  VertexSet original;
};
CompactGraph compact(const Graph& g, const GraphOptions& options = {});

}  // namespace kdclub
