#include "kdclub/graph.hpp"

#include <algorithm>
#include <string>

namespace kdclub {

Graph Graph::build(std::size_t n, std::span<const Edge> edges, const GraphOptions& options) {
  std::vector<Edge> unique;
  unique.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a vertex outside [0, " + std::to_string(n) + ")");
    if (u == v) continue;
    unique.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  Graph g;
  g.n_ = n;
  g.edge_count_ = unique.size();
  g.degree_.assign(n, 0);
  g.active_flag_.assign(n, 1);
  g.words_ = bits::words_for(n);
  g.active_bits_.assign(g.words_, 0);
  g.order_.resize(n);
  g.pos_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    g.order_[v] = v;
    g.pos_[v] = v;
    bits::set(g.active_bits_, v);
  }
  g.active_count_ = n;

  const double pairs = n < 2 ? 1.0 : 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double density = static_cast<double>(unique.size()) / pairs;
  switch (options.representation) {
    case Representation::dense: g.dense_ = true; break;
    case Representation::sparse: g.dense_ = false; break;
    case Representation::automatic:
      g.dense_ = n <= options.dense_max_vertices && density >= options.density_threshold;
      break;
  }

  for (auto [u, v] : unique) {
    ++g.degree_[u];
    ++g.degree_[v];
  }
  if (g.dense_) {
    g.matrix_.assign(n * g.words_, 0);
    for (auto [u, v] : unique) {
      bits::set(g.mutable_row(u), v);
      bits::set(g.mutable_row(v), u);
    }
  } else {
    g.adj_.resize(n);
    for (Vertex v = 0; v < n; ++v) g.adj_[v].reserve(g.degree_[v]);
    g.edge_alive_.assign(unique.size(), 1);
    g.edge_index_.reserve(unique.size());
    for (std::uint32_t id = 0; id < unique.size(); ++id) {
      auto [u, v] = unique[id];
      g.adj_[u].push_back({v, id});
      g.adj_[v].push_back({u, id});
      g.edge_index_.emplace(key(u, v), id);
    }
  }
  return g;
}

double Graph::density() const noexcept {
  if (active_count_ < 2) return 0.0;
  const auto n = static_cast<double>(active_count_);
  return 2.0 * static_cast<double>(edge_count_) / (n * (n - 1.0));
}

bool Graph::edge_live(Vertex u, Vertex v, std::uint32_t* edge_id) const {
  if (dense_) return bits::test(row(u), v);
  auto it = edge_index_.find(key(u, v));
  if (it == edge_index_.end() || !edge_alive_[it->second]) return false;
  if (edge_id) *edge_id = it->second;
  return true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u == v || !is_active(u) || !is_active(v)) return false;
  return edge_live(u, v);
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  out.reserve(degree(v));
  for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u : active_vertices())
    for_each_neighbor(u, [&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  std::sort(out.begin(), out.end());
  return out;
}

void Graph::deactivate(Vertex v) {
  const Vertex last = order_[active_count_ - 1];
  const Vertex slot = pos_[v];
  std::swap(order_[slot], order_[active_count_ - 1]);
  pos_[last] = slot;
  pos_[v] = static_cast<Vertex>(active_count_ - 1);
  --active_count_;
  active_flag_[v] = 0;
  bits::reset(active_bits_, v);
}

void Graph::remove_vertex(Vertex v) {
  expects(is_active(v), "remove_vertex: vertex is not active");
  for_each_neighbor(v, [&](Vertex w) { --degree_[w]; });
  edge_count_ -= degree_[v];
  journal_.push_back({true, v, static_cast<Vertex>(pos_[v]), 0});
  deactivate(v);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  expects(u != v && is_active(u) && is_active(v), "remove_edge: endpoint is not active");
  std::uint32_t id = 0;
  expects(edge_live(u, v, &id), "remove_edge: edge is not present");
  if (dense_) {
    bits::reset(mutable_row(u), v);
    bits::reset(mutable_row(v), u);
  } else {
    edge_alive_[id] = 0;
  }
  --degree_[u];
  --degree_[v];
  --edge_count_;
  journal_.push_back({false, u, v, id});
}

void Graph::rollback(Checkpoint cp) {
  expects(cp.journal_size <= journal_.size(), "rollback: checkpoint is newer than the journal");
  while (journal_.size() > cp.journal_size) {
    const JournalEntry e = journal_.back();
    journal_.pop_back();
    if (e.is_vertex) {
      const Vertex v = e.u;
      const Vertex old_slot = e.v;
      // v is at index active_count_; the vertex that was swapped into
      // old_slot goes back to the end.
      const Vertex moved = order_[old_slot];
      std::swap(order_[old_slot], order_[active_count_]);
      pos_[moved] = static_cast<Vertex>(active_count_);
      pos_[v] = old_slot;
      ++active_count_;
      active_flag_[v] = 1;
      bits::set(active_bits_, v);
      for_each_neighbor(v, [&](Vertex w) { ++degree_[w]; });
      edge_count_ += degree_[v];
    } else {
      if (dense_) {
        bits::set(mutable_row(e.u), e.v);
        bits::set(mutable_row(e.v), e.u);
      } else {
        edge_alive_[e.edge] = 1;
      }
      ++degree_[e.u];
      ++degree_[e.v];
      ++edge_count_;
    }
  }
}

bool same_structure(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edge_count_ != b.edge_count_ || a.active_count_ != b.active_count_) return false;
  if (a.active_flag_ != b.active_flag_) return false;
  if (!std::equal(a.order_.begin(), a.order_.begin() + static_cast<std::ptrdiff_t>(a.active_count_),
                  b.order_.begin()))
    return false;
  for (Vertex v : a.active_vertices()) {
    if (a.degree_[v] != b.degree_[v]) return false;
    if (a.neighbors(v) != b.neighbors(v)) return false;
  }
  return true;
}

std::size_t missing_edges(const Graph& g, std::span<const Vertex> s) {
  std::size_t present = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    expects(g.is_active(s[i]), "missing_edges: inactive vertex in set");
    for (std::size_t j = i + 1; j < s.size(); ++j) present += g.adjacent(s[i], s[j]) ? 1 : 0;
  }
  return s.size() * (s.size() - (s.empty() ? 0 : 1)) / 2 - present;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  expects(u != v && g.is_active(u) && g.is_active(v), "common_neighbors: need two distinct active vertices");
  VertexSet out;
  if (g.is_dense()) {
    const auto ru = g.row(u);
    const auto rv = g.row(v);
    const auto act = g.active_mask();
    for (std::size_t i = 0; i < g.words(); ++i) {
      bits::Word w = ru[i] & rv[i] & act[i];
      while (w) {
        out.push_back(static_cast<Vertex>(i * bits::kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }
  if (g.degree(u) > g.degree(v)) std::swap(u, v);
  g.for_each_neighbor(u, [&](Vertex w) {
    if (g.adjacent(v, w)) out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

CompactGraph compact(const Graph& g, const GraphOptions& options) {
  CompactGraph out;
  out.original.assign(g.active_vertices().begin(), g.active_vertices().end());
  std::sort(out.original.begin(), out.original.end());
  std::vector<Vertex> local(g.vertex_count(), 0);
  for (Vertex i = 0; i < out.original.size(); ++i) local[out.original[i]] = i;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(local[u], local[v]);
  out.graph = Graph::build(out.original.size(), edges, options);
  return out;
}

}  // namespace kdclub
