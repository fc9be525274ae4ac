#include <algorithm>

#include "kdclub/search.hpp"

namespace kdclub {
namespace {

constexpr std::size_t kStarts = 16;
// Below this many active vertices every vertex is a candidate from the start.
constexpr std::size_t kWholeGraphPool = 4096;
constexpr std::size_t kTwoHopPoolLimit = 50'000;

// Vertices in the order a min-degree peeling removes them.
VertexSet degeneracy_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t max_degree = 0;
  for (Vertex v : g.active_vertices()) max_degree = std::max(max_degree, g.degree(v));
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::vector<Vertex>> buckets(max_degree + 1);
  VertexSet active(g.active_vertices().begin(), g.active_vertices().end());
  std::sort(active.begin(), active.end());
  for (Vertex v : active) {
    degree[v] = g.degree(v);
    buckets[degree[v]].push_back(v);
  }
  std::vector<char> done(n, 0);
  VertexSet order;
  order.reserve(active.size());
  std::size_t current = 0;
  while (order.size() < active.size()) {
    while (current > 0 && !buckets[current - 1].empty()) --current;
    while (buckets[current].empty()) ++current;
    const Vertex v = buckets[current].back();
    buckets[current].pop_back();
    if (done[v] || degree[v] != current) continue;
    done[v] = 1;
    order.push_back(v);
    g.for_each_neighbor(v, [&](Vertex w) {
      if (!done[w] && degree[w] > 0) {
        --degree[w];
        buckets[degree[w]].push_back(w);
      }
    });
  }
  return order;
}

class Grower {
 public:
  Grower(const Graph& g, std::size_t k)
      : g_(g), k_(k), in_pool_(g.vertex_count(), 0), deficiency_(g.vertex_count(), 0),
        pool_degree_(g.vertex_count(), 0) {}

  VertexSet grow(Vertex start) {
    build_pool(start);
    VertexSet s{start};
    std::size_t missing = 0;
    for (Vertex w : pool_) deficiency_[w] = g_.adjacent(start, w) ? 0 : 1;
    for (Vertex w : pool_)
      if (missing + deficiency_[w] > k_) in_pool_[w] = 0;
    for (Vertex w : pool_)
      if (in_pool_[w]) {
        std::size_t d = 0;
        g_.for_each_neighbor(w, [&](Vertex x) { d += in_pool_[x] ? 1 : 0; });
        pool_degree_[w] = d;
      }
    while (true) {
      bool found = false;
      Vertex pick = 0;
      for (Vertex w : pool_) {
        if (!in_pool_[w]) continue;
        if (!found || better(w, pick)) {
          pick = w;
          found = true;
        }
      }
      if (!found) break;
      s.push_back(pick);
      missing += deficiency_[pick];
      drop(pick);
      for (Vertex w : pool_) {
        if (!in_pool_[w]) continue;
        if (!g_.adjacent(pick, w)) ++deficiency_[w];
        if (missing + deficiency_[w] > k_) drop(w);
      }
    }
    for (Vertex w : pool_) in_pool_[w] = 0;
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  bool better(Vertex a, Vertex b) const {
    if (pool_degree_[a] != pool_degree_[b]) return pool_degree_[a] > pool_degree_[b];
    if (deficiency_[a] != deficiency_[b]) return deficiency_[a] < deficiency_[b];
    return a < b;
  }

  void drop(Vertex w) {
    in_pool_[w] = 0;
    g_.for_each_neighbor(w, [&](Vertex x) {
      if (in_pool_[x]) --pool_degree_[x];
    });
  }

  void build_pool(Vertex start) {
    pool_.clear();
    auto add = [&](Vertex w) {
      if (w != start && !in_pool_[w]) {
        in_pool_[w] = 1;
        pool_.push_back(w);
      }
    };
    if (g_.active_count() <= kWholeGraphPool) {
      for (Vertex w : g_.active_vertices()) add(w);
    } else {
      g_.for_each_neighbor(start, add);
      const std::size_t first_hop = pool_.size();
      for (std::size_t i = 0; i < first_hop && pool_.size() <= kTwoHopPoolLimit; ++i)
        g_.for_each_neighbor(pool_[i], add);
      if (pool_.size() > kTwoHopPoolLimit) {
        for (std::size_t i = first_hop; i < pool_.size(); ++i) in_pool_[pool_[i]] = 0;
        pool_.resize(first_hop);
      }
    }
    std::sort(pool_.begin(), pool_.end());
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<char> in_pool_;
  std::vector<std::size_t> deficiency_;
  std::vector<std::size_t> pool_degree_;
  VertexSet pool_;
};

}  // namespace

LowerBound fast_lb(const Graph& g, std::size_t k) {
  LowerBound best;
  if (g.active_count() == 0) return best;
  const VertexSet order = degeneracy_order(g);
  Grower grower(g, k);
  const std::size_t starts = std::min(kStarts, order.size());
  for (std::size_t i = 0; i < starts; ++i) {
    VertexSet s = grower.grow(order[order.size() - 1 - i]);
    if (s.size() > best.size) {
      best.size = s.size();
      best.witness = std::move(s);
    }
  }
  return best;
}

}  // namespace kdclub
