#include "kdclub/reduce.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace kdclub {

std::size_t ReductionStats::vertices_removed() const {
  return std::accumulate(vertices_removed_by_rule.begin(), vertices_removed_by_rule.end(), std::size_t{0});
}
std::size_t ReductionStats::edges_removed() const {
  return std::accumulate(edges_removed_by_rule.begin(), edges_removed_by_rule.end(), std::size_t{0});
}

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

/// Evaluates Rules 1-4 on one graph. Holds a clique of the graph that is
/// kept valid under deletions; it certifies lower bounds on color counts.
class RuleEvaluator {
 public:
  RuleEvaluator(const Graph& g, std::size_t k, std::span<const Vertex> clique_hint) : g_(g), k_(k) {
    touched_.assign(g.vertex_count(), 0);
    stamp_.assign(g.vertex_count(), 0);
    in_clique_.assign(g.vertex_count(), 0);
    set_clique(clique_hint);
  }

  std::size_t rule1_bound(Vertex v) const {
    const std::size_t n = g_.active_count();
    const std::size_t d = g_.degree(v);
    return 1 + d + std::min(k_, n - 1 - d);
  }

  std::size_t rule2_bound(Vertex u, Vertex v) const {
    const std::size_t n = g_.active_count();
    const std::size_t common = common_count(u, v);
    return 2 + common + std::min(k_, n - 2 - common);
  }

  std::size_t club_for_seed(std::span<const Vertex> seed);

  void on_edge_removed(Vertex u, Vertex v) {
    if (in_clique_[u] && in_clique_[v]) {
      in_clique_[v] = 0;
      clique_.erase(std::find(clique_.begin(), clique_.end(), v));
    }
  }

 private:
  std::size_t common_count(Vertex u, Vertex v) const {
    if (g_.is_dense()) {
      const auto ru = g_.row(u);
      const auto rv = g_.row(v);
      const auto act = g_.active_mask();
      std::size_t c = 0;
      for (std::size_t i = 0; i < g_.words(); ++i) c += static_cast<std::size_t>(std::popcount(ru[i] & rv[i] & act[i]));
      return c;
    }
    if (g_.degree(u) > g_.degree(v)) std::swap(u, v);
    std::size_t c = 0;
    g_.for_each_neighbor(u, [&](Vertex w) { c += g_.adjacent(v, w) ? 1 : 0; });
    return c;
  }

  void set_clique(std::span<const Vertex> hint) {
    std::vector<Vertex> candidates;
    for (Vertex v : hint)
      if (g_.is_active(v)) candidates.push_back(v);
    if (candidates.empty()) {
      // Greedy clique from the highest-degree vertex.
      Vertex best = 0;
      bool any = false;
      for (Vertex v : g_.active_vertices())
        if (!any || g_.degree(v) > g_.degree(best) || (g_.degree(v) == g_.degree(best) && v < best)) {
          best = v;
          any = true;
        }
      if (!any) return;
      candidates = g_.neighbors(best);
      candidates.insert(candidates.begin(), best);
    }
    std::stable_sort(candidates.begin() + 1, candidates.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    for (Vertex v : candidates) {
      bool ok = true;
      for (Vertex q : clique_)
        if (!g_.adjacent(q, v)) {
          ok = false;
          break;
        }
      if (ok) {
        clique_.push_back(v);
        in_clique_[v] = 1;
      }
    }
  }

  const Graph& g_;
  std::size_t k_;
  BoundEngine engine_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<char> in_clique_;
  std::vector<Vertex> clique_;
  std::vector<VertexSet> classes_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> colors_;
};

std::size_t RuleEvaluator::club_for_seed(std::span<const Vertex> seed) {
  const std::size_t h = seed.size();
  const std::size_t missing = missing_edges(g_, seed);
  expects(missing <= k_, "seed_club: seed is not a k-defective clique");
  const std::size_t kappa = k_ - missing;
  const std::size_t last = std::min(k_, kappa);

  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  // touched_[w] counts seed vertices adjacent to w; seed members get a
  // sentinel so they are never candidates.
  const std::uint32_t seed_mark = static_cast<std::uint32_t>(h + 1);
  for (Vertex s : seed) {
    stamp_[s] = epoch_;
    touched_[s] = seed_mark;
  }
  std::vector<Vertex> near;
  for (Vertex s : seed)
    g_.for_each_neighbor(s, [&](Vertex w) {
      if (stamp_[w] != epoch_) {
        stamp_[w] = epoch_;
        touched_[w] = 0;
        near.push_back(w);
      }
      if (touched_[w] != seed_mark) ++touched_[w];
    });

  const std::size_t n_classes = std::min(h, last) + 1;
  classes_.assign(n_classes, {});
  for (Vertex w : near) {
    if (touched_[w] == seed_mark) continue;
    const std::size_t deficiency = h - touched_[w];
    if (deficiency < n_classes) classes_[deficiency].push_back(w);
  }
  std::size_t near_count = 0;
  for (Vertex w : near) near_count += touched_[w] == seed_mark ? 0 : 1;
  const std::size_t far_count = g_.active_count() - h - near_count;

  sizes_.assign(n_classes, 0);
  colors_.assign(n_classes, 0);
  for (std::size_t i = 0; i < n_classes && i < h; ++i) {
    std::sort(classes_[i].begin(), classes_[i].end());
    sizes_[i] = classes_[i].size();
    if (sizes_[i] > 0) colors_[i] = engine_.color_count(g_, classes_[i]);
  }
  if (h <= last && far_count > 0) {
    // Vertices adjacent to no seed vertex form class h. Its first chunk has
    // at least as many vertices as it has colors, which is at least the
    // number of clique vertices it contains. Once that chunk alone exceeds
    // the whole budget the bound no longer depends on its exact coloring.
    std::size_t clique_far = 0;
    for (Vertex q : clique_)
      if (g_.is_active(q) && stamp_[q] != epoch_) ++clique_far;
    sizes_[h] = far_count;
    if (h * clique_far > kappa) {
      colors_[h] = far_count;
    } else {
      VertexSet far;
      far.reserve(far_count);
      for (Vertex w : g_.active_vertices())
        if (stamp_[w] != epoch_) far.push_back(w);
      std::sort(far.begin(), far.end());
      colors_[h] = engine_.color_count(g_, far);
    }
  }
  return engine_.bound_from_sizes(k_, h, kappa, sizes_, colors_);
}

std::size_t run_vertex_sweep(Graph& g, std::size_t lb, bool use_club, RuleEvaluator& rules, ReductionStats& stats) {
  std::deque<Vertex> queue;
  std::vector<char> queued(g.vertex_count(), 0);
  VertexSet initial(g.active_vertices().begin(), g.active_vertices().end());
  std::sort(initial.begin(), initial.end());
  for (Vertex v : initial) {
    queue.push_back(v);
    queued[v] = 1;
  }
  std::size_t removed = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    if (!g.is_active(v)) continue;
    int rule = 0;
    if (rules.rule1_bound(v) <= lb) {
      rule = 1;
    } else if (use_club) {
      ++stats.club_evaluations;
      const Vertex seed[] = {v};
      if (rules.club_for_seed(seed) <= lb) rule = 3;
    }
    if (rule == 0) continue;
    const VertexSet neighbors = g.neighbors(v);
    g.remove_vertex(v);
    ++stats.vertices_removed_by_rule[static_cast<std::size_t>(rule)];
    ++removed;
    for (Vertex w : neighbors)
      if (!queued[w]) {
        queued[w] = 1;
        queue.push_back(w);
      }
  }
  return removed;
}

std::size_t run_edge_sweep(Graph& g, std::size_t lb, bool use_club, std::optional<std::size_t> budget,
                           RuleEvaluator& rules, ReductionStats& stats) {
  std::deque<Edge> queue;
  std::unordered_set<std::uint64_t> queued;
  for (const Edge& e : g.edges()) {
    queue.push_back(e);
    queued.insert(edge_key(e.first, e.second));
  }
  std::size_t removed = 0;
  std::size_t club_calls = 0;
  auto enqueue = [&](Vertex a, Vertex b) {
    if (queued.insert(edge_key(a, b)).second) queue.emplace_back(std::min(a, b), std::max(a, b));
  };
  while (!queue.empty()) {
    const auto [u, v] = queue.front();
    queue.pop_front();
    queued.erase(edge_key(u, v));
    if (!g.adjacent(u, v)) continue;
    int rule = 0;
    if (rules.rule2_bound(u, v) <= lb) {
      rule = 2;
    } else if (use_club) {
      if (budget && club_calls >= *budget) {
        stats.edge_budget_exhausted = true;
      } else {
        ++club_calls;
        ++stats.club_evaluations;
        const Vertex seed[] = {u, v};
        if (rules.club_for_seed(seed) <= lb) rule = 4;
      }
    }
    if (rule == 0) continue;
    g.remove_edge(u, v);
    rules.on_edge_removed(u, v);
    ++stats.edges_removed_by_rule[static_cast<std::size_t>(rule)];
    ++removed;
    g.for_each_neighbor(u, [&](Vertex w) { enqueue(u, w); });
    g.for_each_neighbor(v, [&](Vertex w) { enqueue(v, w); });
  }
  return removed;
}

}  // namespace

std::size_t seed_club(const Graph& g, std::size_t k, std::span<const Vertex> seed, std::span<const Vertex> clique_hint) {
  expects(seed.size() == 1 || seed.size() == 2, "seed_club: seed must hold one or two vertices");
  for (Vertex v : seed) expects(g.is_active(v), "seed_club: inactive seed vertex");
  RuleEvaluator rules(g, k, clique_hint);
  return rules.club_for_seed(seed);
}

std::size_t check_vertices(Graph& g, std::size_t k, std::size_t lb, bool use_club, ReductionStats* stats) {
  ReductionStats local;
  RuleEvaluator rules(g, k, {});
  return run_vertex_sweep(g, lb, use_club, rules, stats ? *stats : local);
}

std::size_t check_edges(Graph& g, std::size_t k, std::size_t lb, bool use_club, ReductionStats* stats,
                        std::optional<std::size_t> club_budget) {
  ReductionStats local;
  RuleEvaluator rules(g, k, {});
  return run_edge_sweep(g, lb, use_club, club_budget, rules, stats ? *stats : local);
}

ReductionStats preprocess(Graph& g, std::size_t k, std::size_t lb, const ReduceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ReductionStats stats;
  RuleEvaluator rules(g, k, options.clique_hint);
  const bool club = options.use_club;

  run_vertex_sweep(g, lb, false, rules, stats);
  if (club) run_vertex_sweep(g, lb, true, rules, stats);
  run_edge_sweep(g, lb, false, std::nullopt, rules, stats);
  stats.passes = 1;
  while (true) {
    ++stats.passes;
    std::size_t removed = run_vertex_sweep(g, lb, club, rules, stats);
    removed += run_edge_sweep(g, lb, club, options.edge_club_budget, rules, stats);
    if (removed == 0) break;
  }
  stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

}  // namespace kdclub
