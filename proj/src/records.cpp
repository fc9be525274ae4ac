#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "kdclub/io.hpp"

namespace kdclub {

RecordFormat parse_record_format(const std::string& name) {
  if (name == "csv") return RecordFormat::csv;
  if (name == "json") return RecordFormat::json;
  if (name == "table") return RecordFormat::table;
  throw InputError("unknown output format '" + name + "' (expected csv, json or table)");
}

RunRecord make_record(const Instance& instance, const SolverConfig& config, const SolveResult& result) {
  RunRecord r;
  r.instance = instance.name;
  r.n = instance.n;
  r.m = Graph::build(instance.n, instance.edges).edge_count();
  r.k = config.k;
  r.reduced_n = result.reduced_vertices;
  r.reduced_m = result.reduced_edges;
  r.best_size = result.best_size;
  r.status = result.status;
  r.tree_nodes = result.tree_nodes;
  r.preprocess_time = result.preprocess_time;
  r.total_time = result.total_time;
  r.config = config.fingerprint();
  return r;
}

const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> columns{"instance", "n",      "m",          "k",
                                                "reduced_n", "reduced_m", "best_size", "status",
                                                "tree_nodes", "preprocess_time", "total_time", "config"};
  return columns;
}

namespace {

std::string seconds(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << value;
  return out.str();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string text;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) text += sep;
    text += parts[i];
  }
  return text;
}

std::vector<std::string> fields(const RunRecord& r) {
  return {r.instance,
          std::to_string(r.n),
          std::to_string(r.m),
          std::to_string(r.k),
          std::to_string(r.reduced_n),
          std::to_string(r.reduced_m),
          std::to_string(r.best_size),
          to_string(r.status),
          std::to_string(r.tree_nodes),
          seconds(r.preprocess_time),
          seconds(r.total_time),
          r.config};
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

bool any_witness(const std::vector<RunRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const RunRecord& r) { return r.witness.has_value(); });
}

void emit_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  auto header = record_columns();
  const bool witness = any_witness(records);
  if (witness) header.push_back("witness");
  out << join(header, ",") << "\n";
  for (const RunRecord& r : records) {
    auto row = fields(r);
    if (witness) row.push_back(r.witness ? join(*r.witness, " ") : "");
    for (auto& f : row) f = csv_quote(f);
    out << join(row, ",") << "\n";
  }
}

void emit_json(std::ostream& out, const std::vector<RunRecord>& records) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const RunRecord& r : records) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["reduced_n"] = r.reduced_n;
    j["reduced_m"] = r.reduced_m;
    j["best_size"] = r.best_size;
    j["status"] = to_string(r.status);
    j["tree_nodes"] = r.tree_nodes;
    j["preprocess_time"] = std::round(r.preprocess_time * 1000.0) / 1000.0;
    j["total_time"] = std::round(r.total_time * 1000.0) / 1000.0;
    j["config"] = r.config;
    if (r.witness) j["witness"] = *r.witness;
    list.push_back(std::move(j));
  }
  out << list.dump(2) << "\n";
}

void emit_table(std::ostream& out, const std::vector<RunRecord>& records) {
  auto header = record_columns();
  const bool witness = any_witness(records);
  if (witness) header.push_back("witness");
  std::vector<std::vector<std::string>> rows{header};
  for (const RunRecord& r : records) {
    auto row = fields(r);
    if (witness) row.push_back(r.witness ? join(*r.witness, " ") : "");
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::left << std::setw(static_cast<int>(i + 1 == row.size() ? 0 : width[i])) << row[i];
    }
    out << "\n";
  }
}

}  // namespace

void emit_records(std::ostream& out, const std::vector<RunRecord>& records, RecordFormat format) {
  switch (format) {
    case RecordFormat::csv: emit_csv(out, records); break;
    case RecordFormat::json: emit_json(out, records); break;
    case RecordFormat::table: emit_table(out, records); break;
  }
}

}  // namespace kdclub
