#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kdclub/graph.hpp"
#include "kdclub/search.hpp"

namespace kdclub {

enum class InstanceFormat { automatic, dimacs, edge_list, matrix_market };

InstanceFormat parse_format(const std::string& name);
std::string to_string(InstanceFormat format);

/// A parsed instance. Vertices are renumbered 0..n-1; `labels[v]` is the
/// identifier used for v in the file (1-based ids for DIMACS and
/// MatrixMarket, the raw token for edge lists).
struct Instance {
  std::string name;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
};

/// Throws ParseError (with a 1-based line number) on malformed input.
Instance parse_instance(std::istream& in, InstanceFormat format = InstanceFormat::automatic,
                        const std::string& name = "");
Instance read_instance(const std::string& path, InstanceFormat format = InstanceFormat::automatic);

enum class RecordFormat { csv, json, table };
RecordFormat parse_record_format(const std::string& name);

struct RunRecord {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t reduced_n = 0;
  std::size_t reduced_m = 0;
  std::size_t best_size = 0;
  SolveStatus status = SolveStatus::optimal;
  std::uint64_t tree_nodes = 0;
  double preprocess_time = 0.0;
  double total_time = 0.0;
  std::string config;
  /// Witness in file labels; printed only when requested.
  std::optional<std::vector<std::string>> witness;
};

RunRecord make_record(const Instance& instance, const SolverConfig& config, const SolveResult& result);

/// Column order of the csv output.
const std::vector<std::string>& record_columns();

void emit_records(std::ostream& out, const std::vector<RunRecord>& records, RecordFormat format);

}  // namespace kdclub
