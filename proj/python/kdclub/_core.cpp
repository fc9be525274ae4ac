#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kdclub/bound.hpp"
#include "kdclub/io.hpp"
#include "kdclub/oracle.hpp"
#include "kdclub/reduce.hpp"
#include "kdclub/search.hpp"

namespace py = pybind11;
using namespace kdclub;

namespace {

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph::build(n, edges); }

py::dict result_dict(const SolveResult& r) {
  py::dict d;
  d["best_size"] = r.best_size;
  d["witness"] = r.witness;
  d["status"] = to_string(r.status);
  d["tree_nodes"] = r.tree_nodes;
  d["preprocess_time"] = r.preprocess_time;
  d["total_time"] = r.total_time;
  d["lower_bound"] = r.lower_bound_size;
  d["reduced_n"] = r.reduced_vertices;
  d["reduced_m"] = r.reduced_edges;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact maximum k-defective clique solver";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);

  m.def(
      "solve",
      [](std::size_t n, const std::vector<Edge>& edges, std::size_t k, double time_limit, std::uint64_t seed,
         bool club_in_preprocess, bool club_in_bnb) {
        SolverConfig c;
        c.k = k;
        c.time_limit = time_limit;
        c.seed = seed;
        c.club_in_preprocess = club_in_preprocess;
        c.club_in_bnb = club_in_bnb;
        const Graph g = make_graph(n, edges);
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = solve(g, c);
        }
        py::dict d = result_dict(r);
        d["config"] = c.fingerprint();
        return d;
      },
      py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("time_limit") = 1800.0, py::arg("seed") = 0,
      py::arg("club_in_preprocess") = true, py::arg("club_in_bnb") = true,
      "Largest vertex set of the graph missing at most k edges.");

  m.def(
      "brute_force",
      [](std::size_t n, const std::vector<Edge>& edges, std::size_t k) {
        const OracleResult r = brute_force(make_graph(n, edges), k);
        return py::make_tuple(r.size, r.witness);
      },
      py::arg("n"), py::arg("edges"), py::arg("k"), "Exhaustive reference solver (at most 24 vertices).");

  m.def(
      "club",
      [](std::size_t n, const std::vector<Edge>& edges, std::size_t k, const VertexSet& s, const VertexSet& c) {
        return club(make_graph(n, edges), k, s, c);
      },
      py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("s"), py::arg("c"),
      "Coloring-based upper bound for extensions of S by vertices of C.");

  m.def(
      "kdbb_vertex_bound",
      [](std::size_t n, const std::vector<Edge>& edges, std::size_t k, const VertexSet& s, Vertex v) {
        return kdbb_vertex_bound(make_graph(n, edges), k, s, v);
      },
      py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("s"), py::arg("v"));

  m.def(
      "kdbb_edge_bound",
      [](std::size_t n, const std::vector<Edge>& edges, std::size_t k, const VertexSet& s, Vertex u, Vertex v) {
        return kdbb_edge_bound(make_graph(n, edges), k, s, u, v);
      },
      py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("s"), py::arg("u"), py::arg("v"));

  m.def(
      "preprocess",
      [](std::size_t n, const std::vector<Edge>& edges, std::size_t k, std::size_t lb, bool use_club) {
        Graph g = make_graph(n, edges);
        ReduceOptions o;
        o.use_club = use_club;
        preprocess(g, k, lb, o);
        VertexSet vertices(g.active_vertices().begin(), g.active_vertices().end());
        std::sort(vertices.begin(), vertices.end());
        return py::make_tuple(vertices, g.edges());
      },
      py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("lb"), py::arg("use_club") = true,
      "Reduced graph as (remaining vertices, remaining edges).");

  m.def(
      "read_instance",
      [](const std::string& path, const std::string& format) {
        const Instance inst = read_instance(path, parse_format(format));
        return py::make_tuple(inst.n, inst.edges, inst.labels);
      },
      py::arg("path"), py::arg("format") = "auto", "Parse a graph file into (n, edges, labels).");
}
