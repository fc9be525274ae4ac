#include "kdclub/search.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "kdclub/bound.hpp"

namespace kdclub {

void SolverConfig::validate() const {
  if (!(time_limit > 0.0)) throw InputError("time limit must be positive");
  if (!(density_threshold >= 0.0 && density_threshold <= 1.0))
    throw InputError("density threshold must lie in [0, 1]");
}

std::string SolverConfig::fingerprint() const {
  std::ostringstream out;
  out << "pre=" << (club_in_preprocess ? "club" : "kdbb") << ";bnb=" << (club_in_bnb ? "club" : "kdbb")
      << ";seed=" << seed;
  if (node_bound_reduction) out << ";node_ub=on";
  if (edge_club_budget) out << ";edge_budget=" << *edge_club_budget;
  return out.str();
}

std::string to_string(SolveStatus status) { return status == SolveStatus::optimal ? "optimal" : "timeout"; }

namespace {

using Clock = std::chrono::steady_clock;

class Searcher {
 public:
  Searcher(Graph& g, const SolverConfig& config, Clock::time_point deadline, const PruneObserver& observer)
      : g_(g), config_(config), k_(config.k), deadline_(deadline), observer_(observer),
        in_s_(g.vertex_count(), 0), deficiency_(g.vertex_count(), 0), rank_(g.vertex_count()) {
    std::iota(rank_.begin(), rank_.end(), Vertex{0});
    if (config.seed != 0) {
      std::mt19937_64 rng(config.seed);
      std::shuffle(rank_.begin(), rank_.end(), rng);
    }
  }

  BnbOutcome run(const SearchNode& start, std::size_t lb) {
    best_ = lb;
    for (Vertex v : start.s) {
      expects(g_.is_active(v), "bnb: partial solution contains an inactive vertex");
      add_to_s(v);
    }
    expects(missing_ <= k_, "bnb: partial solution is infeasible");
    const Checkpoint cp = g_.checkpoint();
    expand(!start.s.empty());
    g_.rollback(cp);
    for (auto it = start.s.rbegin(); it != start.s.rend(); ++it) remove_from_s(*it);
    return {best_, best_witness_, nodes_, timed_out_};
  }

 private:
  void add_to_s(Vertex u) {
    missing_ += deficiency_[u];
    in_s_[u] = 1;
    s_.push_back(u);
    for (Vertex w : g_.active_vertices())
      if (!in_s_[w] && !g_.adjacent(u, w)) ++deficiency_[w];
  }

  // Must see the same active set as the matching add_to_s.
  void remove_from_s(Vertex u) {
    for (Vertex w : g_.active_vertices())
      if (!in_s_[w] && !g_.adjacent(u, w)) --deficiency_[w];
    s_.pop_back();
    in_s_[u] = 0;
    missing_ -= deficiency_[u];
  }

  std::size_t kappa() const { return k_ - missing_; }

  void reduce_node() {
    const std::size_t budget = kappa();
    scratch_.assign(g_.active_vertices().begin(), g_.active_vertices().end());
    for (Vertex w : scratch_)
      if (!in_s_[w] && deficiency_[w] > budget) g_.remove_vertex(w);

    pairs_.clear();
    for (Vertex a : g_.active_vertices()) {
      const std::size_t da = deficiency_[a];
      if (in_s_[a] || da == 0) continue;
      const std::size_t threshold = std::max(budget + 1 - da, da);
      g_.for_each_neighbor(a, [&](Vertex b) {
        if (in_s_[b]) return;
        const std::size_t db = deficiency_[b];
        if (db < threshold || (db == da && b < a)) return;
        pairs_.emplace_back(a, b);
      });
    }
    for (auto [a, b] : pairs_) g_.remove_edge(a, b);

    if (config_.node_bound_reduction) {
      const std::size_t candidates = g_.active_count() - s_.size();
      scratch_.assign(g_.active_vertices().begin(), g_.active_vertices().end());
      for (Vertex w : scratch_) {
        if (in_s_[w]) continue;
        const std::size_t in_c = g_.degree(w) - (s_.size() - deficiency_[w]);
        const std::size_t others = candidates - 1 - in_c;
        const std::size_t bound = s_.size() + 1 + in_c + std::min(budget - deficiency_[w], others);
        if (bound <= best_) g_.remove_vertex(w);
      }
    }
  }

  std::size_t node_bound() {
    const std::size_t budget = kappa();
    const std::size_t last = std::min(k_, budget);
    if (classes_.size() < last + 1) classes_.resize(last + 1);
    for (std::size_t i = 0; i <= last; ++i) classes_[i].clear();
    for (Vertex w : g_.active_vertices())
      if (!in_s_[w] && deficiency_[w] <= last) classes_[deficiency_[w]].push_back(w);
    return engine_.bound_from_classes(g_, k_, s_.size(), budget, std::span(classes_.data(), last + 1),
                                      config_.club_in_bnb);
  }

  Vertex select_branch_vertex() const {
    Vertex pick = 0;
    bool found = false;
    for (Vertex w : g_.active_vertices()) {
      if (in_s_[w]) continue;
      if (!found || g_.degree(w) < g_.degree(pick) || (g_.degree(w) == g_.degree(pick) && rank_[w] < rank_[pick])) {
        pick = w;
        found = true;
      }
    }
    return pick;
  }

  void expand(bool after_add) {
    ++nodes_;
    if (timed_out_ || Clock::now() >= deadline_) {
      timed_out_ = true;
      return;
    }
    if (after_add) reduce_node();
    if (s_.size() > best_) {
      best_ = s_.size();
      best_witness_ = s_;
    }
    if (g_.active_count() <= best_) return;
    const std::size_t bound = node_bound();
    if (bound <= best_) {
      if (observer_) observer_(PruneEvent{g_, s_, bound, best_});
      return;
    }
    const Vertex u = select_branch_vertex();
    const Checkpoint cp = g_.checkpoint();
    add_to_s(u);
    expand(true);
    g_.rollback(cp);
    remove_from_s(u);
    if (timed_out_) return;
    g_.remove_vertex(u);
    expand(false);
    g_.rollback(cp);
  }

  Graph& g_;
  const SolverConfig& config_;
  std::size_t k_;
  Clock::time_point deadline_;
  const PruneObserver& observer_;

  VertexSet s_;
  std::vector<char> in_s_;
  std::vector<std::size_t> deficiency_;
  std::size_t missing_ = 0;
  std::vector<Vertex> rank_;

  std::size_t best_ = 0;
  VertexSet best_witness_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;

  BoundEngine engine_;
  std::vector<VertexSet> classes_;
  VertexSet scratch_;
  std::vector<Edge> pairs_;
};

Clock::time_point deadline_after(double seconds) {
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

}  // namespace

std::size_t node_reduction(Graph& g, std::size_t k, const SearchNode& node) {
  std::vector<char> in_s(g.vertex_count(), 0);
  for (Vertex v : node.s) {
    expects(g.is_active(v), "node_reduction: partial solution contains an inactive vertex");
    in_s[v] = 1;
  }
  const std::size_t missing = missing_edges(g, node.s);
  expects(missing <= k, "node_reduction: partial solution is infeasible");
  const std::size_t budget = k - missing;
  std::vector<std::size_t> deficiency(g.vertex_count(), 0);
  for (Vertex w : g.active_vertices())
    if (!in_s[w])
      for (Vertex v : node.s) deficiency[w] += g.adjacent(v, w) ? 0 : 1;

  std::size_t removed = 0;
  const VertexSet snapshot(g.active_vertices().begin(), g.active_vertices().end());
  for (Vertex w : snapshot)
    if (!in_s[w] && deficiency[w] > budget) {
      g.remove_vertex(w);
      ++removed;
    }
  std::vector<Edge> doomed;
  for (auto [a, b] : g.edges())
    if (!in_s[a] && !in_s[b] && deficiency[a] + deficiency[b] > budget) doomed.emplace_back(a, b);
  for (auto [a, b] : doomed) g.remove_edge(a, b);
  return removed + doomed.size();
}

BnbOutcome bnb(Graph& g, const SolverConfig& config, const SearchNode& start, std::size_t lb,
               const PruneObserver& observer) {
  config.validate();
  Searcher searcher(g, config, deadline_after(config.time_limit), observer);
  return searcher.run(start, lb);
}

SolveResult solve(const Graph& g, const SolverConfig& config, const PruneObserver& observer) {
  config.validate();
  const auto start = Clock::now();
  const auto deadline = deadline_after(config.time_limit);
  SolveResult result;

  const LowerBound initial = fast_lb(g, config.k);
  result.lower_bound_size = initial.size;

  Graph work = g;
  ReduceOptions reduce_options;
  reduce_options.use_club = config.club_in_preprocess;
  reduce_options.edge_club_budget = config.edge_club_budget;
  reduce_options.clique_hint = initial.witness;
  result.reduction = preprocess(work, config.k, initial.size, reduce_options);
  result.reduced_vertices = work.active_count();
  result.reduced_edges = work.edge_count();
  result.preprocess_time = std::chrono::duration<double>(Clock::now() - start).count();
  if (config.trace)
    std::cerr << "[kdclub] k=" << config.k << " lb=" << initial.size << " reduced |V'|=" << result.reduced_vertices
              << " |E'|=" << result.reduced_edges << " in " << result.preprocess_time << "s\n";

  GraphOptions options;
  options.density_threshold = config.density_threshold;
  // The search is bitset-driven whenever the kernel is small enough.
  if (work.active_count() <= 8192) options.representation = Representation::dense;
  CompactGraph kernel = compact(work, options);

  Searcher searcher(kernel.graph, config, deadline, observer);
  const BnbOutcome outcome = searcher.run({}, initial.size);
  result.tree_nodes = outcome.tree_nodes;
  result.status = outcome.timed_out ? SolveStatus::timeout : SolveStatus::optimal;
  if (outcome.best_size > initial.size) {
    result.best_size = outcome.best_size;
    for (Vertex v : outcome.witness) result.witness.push_back(kernel.original[v]);
    std::sort(result.witness.begin(), result.witness.end());
  } else {
    result.best_size = initial.size;
    result.witness = initial.witness;
  }
  result.total_time = std::chrono::duration<double>(Clock::now() - start).count();
  if (config.trace)
    std::cerr << "[kdclub] best=" << result.best_size << " status=" << to_string(result.status)
              << " nodes=" << result.tree_nodes << " in " << result.total_time << "s\n";

  if (result.witness.size() != result.best_size || missing_edges(g, result.witness) > config.k)
    throw std::logic_error("solver produced an infeasible witness");
  return result;
}

}  // namespace kdclub
