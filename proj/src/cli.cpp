#include "kdclub/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kdclub/io.hpp"
#include "kdclub/oracle.hpp"
#include "kdclub/search.hpp"

namespace kdclub {

namespace {

struct Options {
  std::vector<std::string> instances;
  std::vector<std::size_t> ks;
  double time_limit = 1800.0;
  std::uint64_t seed = 0;
  bool no_club_pre = false;
  bool no_club_bnb = false;
  bool node_bound = false;
  bool oracle_check = false;
  bool witness = false;
  bool trace = false;
  std::string format = "auto";
  std::string emit = "table";
  std::string out;
};

void build_app(CLI::App& app, Options& o) {
  app.add_option("instances", o.instances, "Instance files")->required();
  app.add_option("--k", o.ks, "Missing-edge budget; repeat for a sweep (default 1)")->take_all();
  app.add_option("--time-limit", o.time_limit, "Seconds per run")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Branching tie-break seed; 0 breaks ties by lowest id")->capture_default_str();
  app.add_flag("--no-club-pre", o.no_club_pre, "Preprocess with Rules 1 and 2 only");
  app.add_flag("--no-club-bnb", o.no_club_bnb, "Bound search nodes without coloring");
  app.add_flag("--node-bound", o.node_bound, "Also drop candidates by the vertex bound at every node");
  app.add_flag("--oracle-check", o.oracle_check,
               "Compare against exhaustive search (graphs with at most 24 vertices)");
  app.add_option("--format", o.format, "Instance format")
      ->check(CLI::IsMember({"auto", "dimacs", "edgelist", "mtx"}))
      ->capture_default_str();
  app.add_option("--emit", o.emit, "Record format")->check(CLI::IsMember({"json", "csv", "table"}))->capture_default_str();
  app.add_option("--out", o.out, "Write records to this file instead of stdout");
  app.add_flag("--witness", o.witness, "Include the best vertex set (file labels) in each record");
  app.add_flag("--trace", o.trace, "Progress messages on stderr");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum k-defective clique solver"};
  app.name("kdclub");
  Options o;
  build_app(app, o);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }
  if (o.ks.empty()) o.ks.push_back(1);

  std::vector<RunRecord> records;
  bool any_timeout = false;
  try {
    const InstanceFormat format = parse_format(o.format);
    for (const std::string& path : o.instances) {
      const Instance instance = read_instance(path, format);
      const Graph graph = Graph::build(instance.n, instance.edges);
      for (std::size_t k : o.ks) {
        SolverConfig config;
        config.k = k;
        config.time_limit = o.time_limit;
        config.seed = o.seed;
        config.club_in_preprocess = !o.no_club_pre;
        config.club_in_bnb = !o.no_club_bnb;
        config.node_bound_reduction = o.node_bound;
        config.trace = o.trace;
        const SolveResult result = solve(graph, config);
        any_timeout = any_timeout || result.status == SolveStatus::timeout;
        RunRecord record = make_record(instance, config, result);
        if (o.witness) {
          std::vector<std::string> labels;
          for (Vertex v : result.witness) labels.push_back(instance.labels[v]);
          record.witness = std::move(labels);
        }
        if (o.oracle_check) {
          if (graph.vertex_count() > kOracleMaxVertices) {
            err << "note: oracle check skipped for " << instance.name << " (" << graph.vertex_count()
                << " vertices > " << kOracleMaxVertices << ")\n";
          } else if (result.status == SolveStatus::optimal) {
            const OracleResult expected = brute_force(graph, k);
            if (expected.size != result.best_size) {
              err << "error: oracle mismatch on " << instance.name << " k=" << k << ": solver " << result.best_size
                  << ", exhaustive " << expected.size << "\n";
              return 1;
            }
          }
        }
        records.push_back(std::move(record));
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const RecordFormat emit = parse_record_format(o.emit);
  if (o.out.empty()) {
    emit_records(out, records, emit);
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write '" << o.out << "'\n";
      return 1;
    }
    emit_records(file, records, emit);
  }
  return any_timeout ? 2 : 0;
}

}  // namespace kdclub
