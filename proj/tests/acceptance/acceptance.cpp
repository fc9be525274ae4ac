// Acceptance checks. Usage: kdclub_acceptance <criterion>... | all
// Prints one PASS/FAIL/SKIP line per criterion. Exit code 0 when all ran
// criteria pass, 1 on any failure, 77 when every requested criterion was
// skipped for missing data.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "../support.hpp"
#include "kdclub/bound.hpp"
#include "kdclub/cli.hpp"
#include "kdclub/io.hpp"
#include "kdclub/oracle.hpp"
#include "kdclub/reduce.hpp"
#include "kdclub/search.hpp"

using namespace kdclub;
using kdclub::testing::all_but;
namespace fs = std::filesystem;

namespace {

enum class Verdict { pass, fail, skip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt(double seconds) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << seconds << "s";
  return out.str();
}

// First failure message wins; later ones are counted.
struct Failures {
  std::size_t count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  Outcome verdict(const std::string& ok_detail) const {
    if (count == 0) return {Verdict::pass, ok_detail};
    return {Verdict::fail, std::to_string(count) + " failures; first: " + first};
  }
};

SolverConfig toggled(std::size_t k, int toggles, double time_limit = 1800.0) {
  SolverConfig c;
  c.k = k;
  c.club_in_preprocess = (toggles & 1) != 0;
  c.club_in_bnb = (toggles & 2) != 0;
  c.time_limit = time_limit;
  return c;
}

std::string toggle_name(int toggles) { return toggled(0, toggles).fingerprint(); }

const std::vector<testing::CorpusEntry>& corpus() {
  static const auto entries = testing::corpus(500, 6, 18, 20240601);
  return entries;
}

Outcome worked_example() {
  const auto start = Clock::now();
  const Graph g = testing::seven_vertex_example();
  const VertexSet s{0};
  const VertexSet c{1, 2, 3, 4, 5, 6};
  Failures f;
  const auto p = partition_by_deficiency(g, s, c, 1);
  if (p.classes[0] != VertexSet{1, 2, 3, 4, 5} || p.classes[1] != VertexSet{6}) f.add("partition");
  const std::size_t r0 = greedy_color(g, p.classes[0]).count;
  const std::size_t r1 = greedy_color(g, p.classes[1]).count;
  if (r0 != 3 || r1 != 1) f.add("colors r0=" + std::to_string(r0) + " r1=" + std::to_string(r1));
  const CostBuckets b = extract(g, 1, s, c);
  if (b.counts != std::vector<std::size_t>{3, 3}) f.add("buckets");
  const std::size_t cl = club(g, 1, s, c);
  if (cl != 5) f.add("club=" + std::to_string(cl));
  const std::size_t ub = kdbb_vertex_bound(g, 1, VertexSet{}, 0);
  if (ub != 7) f.add("kdbb_vertex_bound=" + std::to_string(ub));
  Graph rule1 = g;
  check_vertices(rule1, 1, 6, false);
  if (!rule1.is_active(0)) f.add("Rule 1 removed v0");
  Graph rule3 = g;
  ReductionStats stats;
  check_vertices(rule3, 1, 6, true, &stats);
  if (rule3.is_active(0)) f.add("Rule 3 kept v0");
  const double t = since(start);
  if (t >= 1.0) f.add("took " + fmt(t));
  return f.verdict("r0=3 r1=1 P=(3,3) club=5 ub=7; Rule 1 keeps v0, Rule 3 removes it; " + fmt(t));
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  Failures f;
  std::size_t runs = 0;
  for (const auto& e : corpus()) {
    const std::size_t expected = brute_force_bitmask(e.graph, e.k).size;
    for (int toggles = 0; toggles < 4; ++toggles) {
      const SolveResult r = solve(e.graph, toggled(e.k, toggles));
      ++runs;
      if (r.status != SolveStatus::optimal || r.best_size != expected)
        f.add("n=" + std::to_string(e.graph.vertex_count()) + " k=" + std::to_string(e.k) + " " +
              toggle_name(toggles) + ": solver " + std::to_string(r.best_size) + ", oracle " +
              std::to_string(expected));
    }
  }
  const double t = since(start);
  if (t >= 600.0) f.add("took " + fmt(t));
  return f.verdict(std::to_string(corpus().size()) + " instances x 4 toggles = " + std::to_string(runs) +
                   " exact matches; " + fmt(t));
}

Outcome bound_dominance() {
  const auto start = Clock::now();
  Failures f;
  std::size_t vertex_checks = 0, edge_checks = 0;
  for (const auto& e : corpus()) {
    const Graph& g = e.graph;
    for (Vertex v : g.active_vertices()) {
      const VertexSet seed{v};
      ++vertex_checks;
      if (club(g, e.k, seed, all_but(g, seed)) > kdbb_vertex_bound(g, e.k, VertexSet{}, v))
        f.add("vertex " + std::to_string(v));
    }
    for (auto [u, v] : g.edges()) {
      const VertexSet seed{u, v};
      ++edge_checks;
      if (club(g, e.k, seed, all_but(g, seed)) > kdbb_edge_bound(g, e.k, VertexSet{}, u, v))
        f.add("edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
  return f.verdict(std::to_string(vertex_checks) + " vertex and " + std::to_string(edge_checks) +
                   " edge comparisons; " + fmt(since(start)));
}

Outcome bound_soundness() {
  const auto start = Clock::now();
  Failures f;
  std::mt19937_64 rng(424242);
  std::size_t states = 0, tight = 0;
  for (const auto& e : corpus()) {
    if (e.graph.vertex_count() > 14) continue;
    for (int sample = 0; sample < 8; ++sample) {
      VertexSet s, c;
      for (Vertex v : e.graph.active_vertices()) {
        const auto roll = rng() % 6;
        if (roll == 0) {
          s.push_back(v);
          if (missing_edges(e.graph, s) > e.k) {
            s.pop_back();
            c.push_back(v);
          }
        } else if (roll < 5) {
          c.push_back(v);
        }
      }
      VertexSet allowed = s;
      allowed.insert(allowed.end(), c.begin(), c.end());
      const std::size_t truth = brute_force(e.graph, e.k, s, allowed).size;
      const std::size_t bound = club(e.graph, e.k, s, c);
      ++states;
      tight += bound == truth ? 1 : 0;
      if (bound < truth)
        f.add("club " + std::to_string(bound) + " < restricted optimum " + std::to_string(truth) +
              " (|S|=" + std::to_string(s.size()) + ", |C|=" + std::to_string(c.size()) + ")");
    }
  }
  if (states < 2000) f.add("only " + std::to_string(states) + " states sampled");
  const double t = since(start);
  if (t >= 600.0) f.add("took " + fmt(t));
  return f.verdict(std::to_string(states) + " states, bound tight on " + std::to_string(tight) + "; " + fmt(t));
}

Outcome staircase() {
  const auto start = Clock::now();
  Failures f;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> best = [&](std::uint64_t parts, std::uint64_t left) {
    if (parts == 1) return left * (left == 0 ? 0 : left - 1) / 2;
    std::uint64_t m = ~std::uint64_t{0};
    for (std::uint64_t x = 0; x <= left; ++x) m = std::min(m, x * (x == 0 ? 0 : x - 1) / 2 + best(parts - 1, left - x));
    return m;
  };
  std::size_t cases = 0;
  for (std::uint64_t r = 1; r <= 5; ++r)
    for (std::uint64_t t = 0; t <= 12; ++t) {
      ++cases;
      if (staircase_increment(r, t) != best(r, t)) f.add("r=" + std::to_string(r) + " t=" + std::to_string(t));
    }
  const double t = since(start);
  if (t >= 1.0) f.add("took " + fmt(t));
  return f.verdict(std::to_string(cases) + " (r, t) pairs; " + fmt(t));
}

Outcome preprocessing_safety() {
  const auto start = Clock::now();
  Failures f;
  std::size_t runs = 0, removed = 0;
  for (const auto& e : corpus()) {
    const std::size_t omega = brute_force_bitmask(e.graph, e.k).size;
    const LowerBound lb = fast_lb(e.graph, e.k);
    for (bool use_club : {true, false}) {
      Graph g = e.graph;
      ReduceOptions options;
      options.use_club = use_club;
      options.clique_hint = lb.witness;
      const ReductionStats first = preprocess(g, e.k, lb.size, options);
      removed += first.vertices_removed();
      const std::size_t reduced = brute_force_bitmask(g, e.k).size;
      ++runs;
      if (std::max(lb.size, reduced) != std::max(lb.size, omega))
        f.add("lost a solution: lb=" + std::to_string(lb.size) + " omega=" + std::to_string(omega) +
              " reduced=" + std::to_string(reduced));
      const ReductionStats second = preprocess(g, e.k, lb.size, options);
      if (second.vertices_removed() + second.edges_removed() != 0) f.add("second pass removed more");
    }
  }
  const double t = since(start);
  if (t >= 300.0) f.add("took " + fmt(t));
  return f.verdict(std::to_string(runs) + " reductions (" + std::to_string(removed) +
                   " vertices removed in total), all safe and at a fixed point; " + fmt(t));
}

std::optional<fs::path> find_instance(const std::vector<std::string>& names) {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("KDCLUB_DATA_DIR")) dirs.emplace_back(env);
  dirs.emplace_back(KDCLUB_DATA_DIR);
  for (const auto& dir : dirs)
    for (const auto& name : names)
      if (fs::exists(dir / name)) return dir / name;
  return std::nullopt;
}

Outcome desk_instance(const std::vector<std::string>& names, std::vector<std::size_t> ks, double budget,
                      std::size_t expected_n, std::size_t expected_m) {
  const auto path = find_instance(names);
  if (!path)
    return {Verdict::skip, names.front() + " not found in KDCLUB_DATA_DIR or " + std::string(KDCLUB_DATA_DIR)};
  const Instance inst = read_instance(path->string());
  const Graph g = Graph::build(inst.n, inst.edges);
  Failures f;
  if (g.vertex_count() != expected_n || g.edge_count() != expected_m)
    f.add("expected |V|=" + std::to_string(expected_n) + " |E|=" + std::to_string(expected_m) + ", got " +
          std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()));
  std::ostringstream detail;
  for (std::size_t k : ks) {
    std::map<int, SolveResult> results;
    for (int toggles : {3, 2, 1, 0}) {
      results[toggles] = solve(g, toggled(k, toggles, budget));
      const SolveResult& r = results[toggles];
      if (r.status != SolveStatus::optimal)
        f.add("k=" + std::to_string(k) + " " + toggle_name(toggles) + " timed out after " + fmt(budget));
      if (r.best_size != results[3].best_size)
        f.add("k=" + std::to_string(k) + " " + toggle_name(toggles) + " found " + std::to_string(r.best_size) +
              ", default found " + std::to_string(results[3].best_size));
    }
    const SolveResult& d = results[3];
    detail << "k=" << k << ": best=" << d.best_size << " tree=" << d.tree_nodes << " time=" << fmt(d.total_time)
           << " (off/off tree=" << results[0].tree_nodes << " time=" << fmt(results[0].total_time) << "); ";
  }
  detail << "all toggles agree";
  return f.verdict(detail.str());
}

Outcome desk_johnson() { return desk_instance({"johnson8-4-4.clq", "johnson8-4-4.txt"}, {1, 3}, 120.0, 70, 1855); }
Outcome desk_c125() { return desk_instance({"C125-9.clq", "C125.9.clq", "C125-9.txt"}, {3}, 600.0, 125, 6963); }
Outcome desk_san200() {
  return desk_instance({"san200-0-7-1.clq", "san200_0.7_1.clq", "san200-0-7-1.txt"}, {3}, 600.0, 200, 13930);
}

Outcome ablation() {
  const auto start = Clock::now();
  std::mt19937_64 rng(777);
  double log_on = 0.0, log_off = 0.0;
  Failures f;
  const int graphs = 30;
  for (int i = 0; i < graphs; ++i) {
    const std::size_t n = 40 + rng() % 41;
    const Graph g = testing::random_graph(n, 0.5, rng());
    const SolveResult on = solve(g, toggled(3, 3, 600.0));
    const SolveResult off = solve(g, toggled(3, 1, 600.0));
    if (on.status != SolveStatus::optimal || off.status != SolveStatus::optimal) f.add("timeout on graph " + std::to_string(i));
    if (on.best_size != off.best_size) f.add("disagreement on graph " + std::to_string(i));
    log_on += std::log(static_cast<double>(std::max<std::uint64_t>(on.tree_nodes, 1)));
    log_off += std::log(static_cast<double>(std::max<std::uint64_t>(off.tree_nodes, 1)));
  }
  const double gm_on = std::exp(log_on / graphs);
  const double gm_off = std::exp(log_off / graphs);
  if (!(gm_on < gm_off)) f.add("geometric mean with coloring " + std::to_string(gm_on) + " not below " + std::to_string(gm_off));
  std::ostringstream detail;
  detail.precision(1);
  detail << std::fixed << "geometric-mean tree nodes " << gm_on << " (coloring bound) vs " << gm_off
         << " (clique-class bound) over " << graphs << " graphs; " << fmt(since(start));
  return f.verdict(detail.str());
}

std::string strip_timing(const std::string& csv) {
  const auto& cols = record_columns();
  const auto pre = std::find(cols.begin(), cols.end(), "preprocess_time") - cols.begin();
  const auto total = std::find(cols.begin(), cols.end(), "total_time") - cols.begin();
  std::istringstream lines(csv);
  std::string line, out;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    long idx = 0;
    while (std::getline(cells, cell, ',')) {
      if (idx != pre && idx != total) out += cell + ",";
      ++idx;
    }
    out += "\n";
  }
  return out;
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "kdclub_acceptance";
  fs::create_directories(dir);
  std::vector<std::string> files;
  for (std::uint64_t seed : {11, 12}) {
    const Graph g = testing::random_graph(60, 0.5, seed);
    const fs::path p = dir / ("random" + std::to_string(seed) + ".clq");
    std::ofstream out(p);
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    files.push_back(p.string());
  }
  if (const auto j = find_instance({"johnson8-4-4.clq"})) files.push_back(j->string());
  Failures f;
  std::size_t compared = 0;
  for (const std::string seed : {"0", "7"})
    for (const std::vector<std::string>& toggles :
         {std::vector<std::string>{}, std::vector<std::string>{"--no-club-pre", "--no-club-bnb"}}) {
      std::vector<std::string> args{"kdclub", "--k", "1", "--k", "3", "--seed", seed, "--emit", "csv", "--witness"};
      args.insert(args.end(), toggles.begin(), toggles.end());
      args.insert(args.end(), files.begin(), files.end());
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::string first;
      for (int repeat = 0; repeat < 2; ++repeat) {
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        if (code != 0) f.add("exit code " + std::to_string(code) + ": " + err.str());
        const std::string stripped = strip_timing(out.str());
        if (repeat == 0)
          first = stripped;
        else if (stripped != first)
          f.add("records differ for seed " + seed);
      }
      ++compared;
    }
  return f.verdict(std::to_string(compared) + " configurations run twice over " + std::to_string(files.size()) +
                   " instances; CSV identical apart from timing columns");
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
      {"worked_example", worked_example},
      {"oracle_equivalence", oracle_equivalence},
      {"bound_dominance", bound_dominance},
      {"bound_soundness", bound_soundness},
      {"staircase_exactness", staircase},
      {"preprocessing_safety", preprocessing_safety},
      {"desk_johnson8_4_4", desk_johnson},
      {"desk_c125_9", desk_c125},
      {"desk_san200_0_7_1", desk_san200},
      {"ablation_signal", ablation},
      {"determinism", determinism},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all")) {
    wanted.clear();
    for (const auto& [name, fn] : criteria()) wanted.push_back(name);
  }
  bool failed = false;
  std::size_t skipped = 0;
  for (const auto& name : wanted) {
    const auto it = std::find_if(criteria().begin(), criteria().end(), [&](const auto& c) { return c.first == name; });
    if (it == criteria().end()) {
      std::cerr << "unknown criterion '" << name << "'\n";
      return 1;
    }
    Outcome o;
    try {
      o = it->second();
    } catch (const std::exception& e) {
      o = {Verdict::fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.verdict == Verdict::pass ? "PASS" : o.verdict == Verdict::fail ? "FAIL" : "SKIP";
    std::cout << tag << " " << name << ": " << o.detail << std::endl;
    failed = failed || o.verdict == Verdict::fail;
    skipped += o.verdict == Verdict::skip ? 1 : 0;
  }
  if (failed) return 1;
  return skipped == wanted.size() ? 77 : 0;
}
