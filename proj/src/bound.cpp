#include "kdclub/bound.hpp"

#include <algorithm>
#include <numeric>

namespace kdclub {

std::uint64_t staircase_increment(std::uint64_t r, std::uint64_t t) {
  expects(r >= 1, "staircase_increment: r must be positive");
  const std::uint64_t d = t / r;
  const std::uint64_t c = t - r * d;
  return c * (d * (d + 1) / 2) + (r - c) * (d * (d == 0 ? 0 : d - 1) / 2);
}

std::size_t CostBuckets::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

DeficiencyPartition partition_by_deficiency(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> c,
                                            std::size_t k) {
  DeficiencyPartition p;
  p.classes.resize(k + 1);
  p.color_counts.assign(k + 1, 0);
  for (Vertex v : c) {
    std::size_t deficiency = 0;
    for (Vertex u : s) deficiency += g.adjacent(u, v) ? 0 : 1;
    if (deficiency <= k)
      p.classes[deficiency].push_back(v);
    else
      p.dropped.push_back(v);
  }
  for (auto& cls : p.classes) std::sort(cls.begin(), cls.end());
  std::sort(p.dropped.begin(), p.dropped.end());
  return p;
}

Coloring greedy_color(const Graph& g, std::span<const Vertex> vertices) {
  BoundEngine engine;
  return engine.color(g, vertices);
}

namespace {

// Appends class sizes to bucket counts: full chunks of r vertices go to
// buckets first, first+1, ...; a trailing partial chunk goes to the next
// bucket. Stops past `last_bucket`.
template <class Sink>
void peel_class(std::size_t size, std::size_t r, std::size_t first, std::size_t last_bucket, Sink&& sink) {
  std::size_t bucket = first;
  while (size >= r && bucket <= last_bucket) {
    sink(bucket, r);
    size -= r;
    ++bucket;
  }
  if (bucket <= last_bucket && size > 0) sink(bucket, size);
}

}  // namespace

CostBuckets extract_buckets(const DeficiencyPartition& partition, std::size_t k, bool keep_members) {
  CostBuckets out;
  out.counts.assign(k + 1, 0);
  if (keep_members) out.members.assign(k + 1, {});
  const std::size_t classes = std::min(partition.classes.size(), k + 1);
  for (std::size_t i = 0; i < classes; ++i) {
    const VertexSet& cls = partition.classes[i];
    if (cls.empty()) continue;
    const std::size_t r = partition.color_counts.at(i);
    expects(r >= 1, "extract_buckets: class has not been colored");
    std::size_t taken = 0;
    peel_class(cls.size(), r, i, k, [&](std::size_t bucket, std::size_t amount) {
      out.counts[bucket] += amount;
      if (keep_members)
        out.members[bucket].insert(out.members[bucket].end(), cls.begin() + static_cast<std::ptrdiff_t>(taken),
                                   cls.begin() + static_cast<std::ptrdiff_t>(taken + amount));
      taken += amount;
    });
  }
  if (keep_members)
    for (auto& m : out.members) std::sort(m.begin(), m.end());
  return out;
}

CostBuckets extract(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c,
                    bool keep_members) {
  DeficiencyPartition p = partition_by_deficiency(g, s, c, k);
  BoundEngine engine;
  for (std::size_t i = 0; i <= k; ++i)
    if (!p.classes[i].empty()) p.color_counts[i] = engine.color_count(g, p.classes[i]);
  return extract_buckets(p, k, keep_members);
}

std::size_t affordable_extension(const CostBuckets& buckets, std::size_t kappa) {
  if (buckets.counts.empty()) return 0;
  std::size_t taken = buckets.counts[0];
  for (std::size_t cost = 1; cost < buckets.counts.size(); ++cost) {
    const std::size_t n = buckets.counts[cost];
    if (cost * n <= kappa) {
      taken += n;
      kappa -= cost * n;
    } else {
      taken += kappa / cost;
      break;
    }
  }
  return taken;
}

namespace {

std::size_t checked_kappa(const Graph& g, std::size_t k, std::span<const Vertex> s) {
  const std::size_t missing = missing_edges(g, s);
  expects(missing <= k, "bound requested for an infeasible partial solution");
  return k - missing;
}

std::size_t class_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c,
                        bool use_coloring) {
  const std::size_t kappa = checked_kappa(g, k, s);
  DeficiencyPartition p = partition_by_deficiency(g, s, c, k);
  BoundEngine engine;
  return engine.bound_from_classes(g, k, s.size(), kappa, p.classes, use_coloring);
}

}  // namespace

std::size_t club(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c) {
  return class_bound(g, k, s, c, true);
}

std::size_t clique_class_bound(const Graph& g, std::size_t k, std::span<const Vertex> s,
                               std::span<const Vertex> c) {
  return class_bound(g, k, s, c, false);
}

namespace {

VertexSet outside(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in_s(g.vertex_count(), 0);
  for (Vertex v : s) in_s[v] = 1;
  VertexSet c;
  for (Vertex v : g.active_vertices())
    if (!in_s[v]) c.push_back(v);
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

std::size_t kdbb_vertex_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c,
                              Vertex v) {
  VertexSet with_v(s.begin(), s.end());
  with_v.push_back(v);
  const std::size_t missing = missing_edges(g, with_v);
  if (missing > k) return s.size() + 1;
  const std::size_t rem = k - missing;
  std::size_t others = 0;
  std::size_t neighbors = 0;
  for (Vertex w : c) {
    if (w == v) continue;
    ++others;
    neighbors += g.adjacent(v, w) ? 1 : 0;
  }
  return s.size() + 1 + neighbors + std::min(rem, others - neighbors);
}

std::size_t kdbb_vertex_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, Vertex v) {
  return kdbb_vertex_bound(g, k, s, outside(g, s), v);
}

std::size_t kdbb_edge_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, std::span<const Vertex> c,
                            Vertex u, Vertex v) {
  expects(u != v, "kdbb_edge_bound: endpoints must differ");
  VertexSet with_uv(s.begin(), s.end());
  with_uv.push_back(u);
  with_uv.push_back(v);
  const std::size_t missing = missing_edges(g, with_uv);
  if (missing > k) return s.size() + 1;
  const std::size_t rem = k - missing;
  std::size_t others = 0;
  std::size_t common = 0;
  for (Vertex w : c) {
    if (w == u || w == v) continue;
    ++others;
    common += (g.adjacent(u, w) && g.adjacent(v, w)) ? 1 : 0;
  }
  return s.size() + 2 + common + std::min(rem, others - common);
}

std::size_t kdbb_edge_bound(const Graph& g, std::size_t k, std::span<const Vertex> s, Vertex u, Vertex v) {
  return kdbb_edge_bound(g, k, s, outside(g, s), u, v);
}

// ---------------------------------------------------------------------------
// BoundEngine

void BoundEngine::order_by_inner_degree(const Graph& g, std::span<const Vertex> vertices) {
  order_.assign(vertices.begin(), vertices.end());
  if (inner_degree_.size() < g.vertex_count()) inner_degree_.resize(g.vertex_count());
  if (g.is_dense()) {
    member_bits_.assign(g.words(), 0);
    for (Vertex v : vertices) bits::set(member_bits_, v);
    for (Vertex v : vertices) inner_degree_[v] = bits::count_and(g.row(v), member_bits_);
  } else {
    if (stamp_.size() < g.vertex_count()) stamp_.assign(g.vertex_count(), 0);
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    for (Vertex v : vertices) stamp_[v] = epoch_;
    for (Vertex v : vertices) {
      std::size_t d = 0;
      g.for_each_neighbor(v, [&](Vertex w) { d += stamp_[w] == epoch_ ? 1 : 0; });
      inner_degree_[v] = d;
    }
  }
  std::sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
    if (inner_degree_[a] != inner_degree_[b]) return inner_degree_[a] > inner_degree_[b];
    return a < b;
  });
}

std::size_t BoundEngine::run_greedy(const Graph& g, std::vector<int>* color_out) {
  std::size_t colors = 0;
  if (color_out) color_out->assign(order_.size(), 0);
  if (g.is_dense()) {
    const std::size_t w = g.words();
    for (std::size_t idx = 0; idx < order_.size(); ++idx) {
      const Vertex v = order_[idx];
      const auto row = g.row(v);
      std::size_t c = 0;
      for (; c < colors; ++c) {
        std::span<const bits::Word> cls{color_bits_.data() + c * w, w};
        if (!bits::intersects(row, cls)) break;
      }
      if (c == colors) {
        ++colors;
        if (color_bits_.size() < colors * w) color_bits_.resize(colors * w);
        std::fill_n(color_bits_.begin() + static_cast<std::ptrdiff_t>(c * w), w, bits::Word{0});
      }
      bits::set(std::span<bits::Word>{color_bits_.data() + c * w, w}, v);
      if (color_out) (*color_out)[idx] = static_cast<int>(c);
    }
    return colors;
  }
  // Sparse: members carry stamp_ == epoch_ from order_by_inner_degree.
  if (color_of_.size() < g.vertex_count()) color_of_.assign(g.vertex_count(), -1);
  for (Vertex v : order_) color_of_[v] = -1;
  for (std::size_t idx = 0; idx < order_.size(); ++idx) {
    const Vertex v = order_[idx];
    if (++color_epoch_ == 0) {
      std::fill(color_seen_.begin(), color_seen_.end(), 0);
      color_epoch_ = 1;
    }
    g.for_each_neighbor(v, [&](Vertex w) {
      if (stamp_[w] == epoch_ && color_of_[w] >= 0) color_seen_[static_cast<std::size_t>(color_of_[w])] = color_epoch_;
    });
    std::size_t c = 0;
    while (c < colors && color_seen_[c] == color_epoch_) ++c;
    if (c == colors) {
      ++colors;
      if (color_seen_.size() < colors) color_seen_.resize(colors, 0);
    }
    color_of_[v] = static_cast<int>(c);
    if (color_out) (*color_out)[idx] = static_cast<int>(c);
  }
  return colors;
}

std::size_t BoundEngine::color_count(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return 0;
  order_by_inner_degree(g, vertices);
  return run_greedy(g, nullptr);
}

Coloring BoundEngine::color(const Graph& g, std::span<const Vertex> vertices) {
  Coloring out;
  if (vertices.empty()) return out;
  for (Vertex v : vertices) expects(g.is_active(v), "greedy_color: inactive vertex");
  order_by_inner_degree(g, vertices);
  std::vector<int> colors;
  out.count = run_greedy(g, &colors);
  out.classes.assign(out.count, {});
  for (std::size_t i = 0; i < order_.size(); ++i) out.classes[static_cast<std::size_t>(colors[i])].push_back(order_[i]);
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  return out;
}

std::size_t BoundEngine::bound_from_classes(const Graph& g, std::size_t k, std::size_t s_size, std::size_t kappa,
                                            std::span<const VertexSet> classes, bool use_coloring) {
  // Classes above kappa only feed buckets that can never be afforded.
  const std::size_t last = std::min(k, kappa);
  const std::size_t n_classes = std::min(classes.size(), last + 1);
  sizes_.assign(n_classes, 0);
  colors_.assign(n_classes, 0);
  for (std::size_t i = 0; i < n_classes; ++i) {
    sizes_[i] = classes[i].size();
    if (sizes_[i] > 0) colors_[i] = use_coloring ? color_count(g, classes[i]) : sizes_[i];
  }
  return bound_from_sizes(k, s_size, kappa, sizes_, colors_);
}

std::size_t BoundEngine::bound_from_sizes(std::size_t k, std::size_t s_size, std::size_t kappa,
                                          std::span<const std::size_t> sizes, std::span<const std::size_t> colors) {
  const std::size_t last = std::min(k, kappa);
  counts_.assign(last + 1, 0);
  const std::size_t n_classes = std::min(sizes.size(), last + 1);
  for (std::size_t i = 0; i < n_classes; ++i) {
    if (sizes[i] == 0) continue;
    expects(colors[i] >= 1, "bound_from_sizes: non-empty class without colors");
    peel_class(sizes[i], colors[i], i, last, [&](std::size_t bucket, std::size_t amount) { counts_[bucket] += amount; });
  }
  std::size_t taken = counts_[0];
  std::size_t budget = kappa;
  for (std::size_t cost = 1; cost <= last; ++cost) {
    const std::size_t n = counts_[cost];
    if (cost * n <= budget) {
      taken += n;
      budget -= cost * n;
    } else {
      taken += budget / cost;
      break;
    }
  }
  return s_size + taken;
}

}  // namespace kdclub
