#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "kdclub/io.hpp"

namespace kdclub {

InstanceFormat parse_format(const std::string& name) {
  if (name == "auto") return InstanceFormat::automatic;
  if (name == "dimacs") return InstanceFormat::dimacs;
  if (name == "edgelist") return InstanceFormat::edge_list;
  if (name == "mtx") return InstanceFormat::matrix_market;
  throw InputError("unknown instance format '" + name + "' (expected auto, dimacs, edgelist or mtx)");
}

std::string to_string(InstanceFormat format) {
  switch (format) {
    case InstanceFormat::automatic: return "auto";
    case InstanceFormat::dimacs: return "dimacs";
    case InstanceFormat::edge_list: return "edgelist";
    case InstanceFormat::matrix_market: return "mtx";
  }
  return "auto";
}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::uint64_t to_unsigned(const std::string& token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + token + "'", line);
  return value;
}

bool blank(const std::string& text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string lower(std::string text) {
  for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return text;
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

Instance parse_dimacs(const std::vector<Line>& lines) {
  Instance inst;
  bool have_header = false;
  for (const Line& line : lines) {
    const auto tokens = split(line.text);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError("second problem line", line.number);
      if (tokens.size() < 4) throw ParseError("problem line needs 'p <format> <n> <m>'", line.number);
      inst.n = to_unsigned(tokens[2], line.number, "vertex count");
      to_unsigned(tokens[3], line.number, "edge count");
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) throw ParseError("edge before the problem line", line.number);
      if (tokens.size() < 3) throw ParseError("edge line needs 'e <u> <v>'", line.number);
      const auto u = to_unsigned(tokens[1], line.number, "vertex id");
      const auto v = to_unsigned(tokens[2], line.number, "vertex id");
      if (u < 1 || u > inst.n || v < 1 || v > inst.n)
        throw ParseError("vertex id out of range 1.." + std::to_string(inst.n), line.number);
      inst.edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError("unexpected line starting with '" + tokens[0] + "'", line.number);
    }
  }
  if (!have_header) throw ParseError("missing problem line", lines.empty() ? 1 : lines.back().number);
  inst.labels = numeric_labels(inst.n);
  return inst;
}

Instance parse_matrix_market(const std::vector<Line>& lines) {
  Instance inst;
  std::size_t i = 0;
  if (lines.empty() || lower(lines[0].text).rfind("%%matrixmarket", 0) != 0)
    throw ParseError("missing %%MatrixMarket banner", lines.empty() ? 1 : lines[0].number);
  const auto banner = split(lower(lines[0].text));
  if (banner.size() < 3 || banner[1] != "matrix" || banner[2] != "coordinate")
    throw ParseError("only 'matrix coordinate' MatrixMarket files are supported", lines[0].number);
  ++i;
  while (i < lines.size() && (blank(lines[i].text) || lines[i].text[0] == '%')) ++i;
  if (i == lines.size()) throw ParseError("missing size line", lines.back().number);
  const auto size = split(lines[i].text);
  if (size.size() != 3) throw ParseError("size line needs '<rows> <cols> <entries>'", lines[i].number);
  const auto rows = to_unsigned(size[0], lines[i].number, "row count");
  const auto cols = to_unsigned(size[1], lines[i].number, "column count");
  const auto entries = to_unsigned(size[2], lines[i].number, "entry count");
  if (rows != cols) throw ParseError("adjacency matrix must be square", lines[i].number);
  inst.n = rows;
  std::uint64_t seen = 0;
  for (++i; i < lines.size(); ++i) {
    if (blank(lines[i].text) || lines[i].text[0] == '%') continue;
    const auto tokens = split(lines[i].text);
    if (tokens.size() < 2) throw ParseError("entry needs '<row> <col>'", lines[i].number);
    const auto u = to_unsigned(tokens[0], lines[i].number, "row index");
    const auto v = to_unsigned(tokens[1], lines[i].number, "column index");
    if (u < 1 || u > inst.n || v < 1 || v > inst.n)
      throw ParseError("index out of range 1.." + std::to_string(inst.n), lines[i].number);
    inst.edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    ++seen;
  }
  if (seen != entries)
    throw ParseError("expected " + std::to_string(entries) + " entries, found " + std::to_string(seen),
                     lines.back().number);
  inst.labels = numeric_labels(inst.n);
  return inst;
}

Instance parse_edge_list(const std::vector<Line>& lines) {
  Instance inst;
  std::unordered_map<std::string, Vertex> ids;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<Vertex>(inst.labels.size()));
    if (inserted) inst.labels.push_back(label);
    return it->second;
  };
  for (const Line& line : lines) {
    if (blank(line.text) || line.text.find_first_not_of(" \t") == line.text.find_first_of("#%")) continue;
    const auto tokens = split(line.text);
    if (tokens.size() < 2) throw ParseError("edge line needs two vertex labels", line.number);
    const Vertex u = id_of(tokens[0]);
    const Vertex v = id_of(tokens[1]);
    inst.edges.emplace_back(u, v);
  }
  inst.n = inst.labels.size();
  return inst;
}

InstanceFormat detect(const std::vector<Line>& lines) {
  for (const Line& line : lines) {
    if (blank(line.text)) continue;
    if (lower(line.text).rfind("%%matrixmarket", 0) == 0) return InstanceFormat::matrix_market;
    const auto tokens = split(line.text);
    if (tokens[0] == "c" || tokens[0] == "p") return InstanceFormat::dimacs;
    if (tokens[0][0] == '#' || tokens[0][0] == '%') continue;
    return InstanceFormat::edge_list;
  }
  return InstanceFormat::edge_list;
}

}  // namespace

Instance parse_instance(std::istream& in, InstanceFormat format, const std::string& name) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  bool any_content = false;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    any_content = any_content || !blank(text);
    lines.push_back({number, std::move(text)});
  }
  if (!any_content) throw ParseError("empty instance", std::max<std::size_t>(number, 1));
  if (format == InstanceFormat::automatic) format = detect(lines);
  Instance inst;
  switch (format) {
    case InstanceFormat::dimacs: inst = parse_dimacs(lines); break;
    case InstanceFormat::matrix_market: inst = parse_matrix_market(lines); break;
    default: inst = parse_edge_list(lines); break;
  }
  inst.name = name;
  return inst;
}

Instance read_instance(const std::string& path, InstanceFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_instance(in, format, std::filesystem::path(path).stem().string());
}

}  // namespace kdclub
