#include <doctest.h>

#include "../support.hpp"
#include "kdclub/oracle.hpp"

using namespace kdclub;

TEST_CASE("oracle values on small structured graphs") {
  const Graph empty = Graph::build(5, {});
  CHECK(brute_force(empty, 0).size == 1);
  CHECK(brute_force(empty, 1).size == 2);
  CHECK(brute_force(empty, 3).size == 3);
  CHECK(brute_force(Graph::build(0, {}), 2).size == 0);

  std::vector<Edge> complete;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) complete.emplace_back(u, v);
  CHECK(brute_force(Graph::build(6, complete), 0).size == 6);

  // A 5-cycle: cliques have 2 vertices, 3 vertices miss 1 edge, 4 miss 3.
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  const Graph c5 = Graph::build(5, cycle);
  CHECK(brute_force(c5, 0).size == 2);
  CHECK(brute_force(c5, 1).size == 3);
  CHECK(brute_force(c5, 2).size == 3);
  CHECK(brute_force(c5, 3).size == 4);
  CHECK(brute_force(c5, 5).size == 5);
}

TEST_CASE("the two exhaustive searches agree and return feasible witnesses") {
  for (const auto& e : testing::corpus(120, 4, 14, 5)) {
    const auto a = brute_force(e.graph, e.k);
    const auto b = brute_force_bitmask(e.graph, e.k);
    CHECK(a.size == b.size);
    CHECK(a.witness.size() == a.size);
    CHECK(missing_edges(e.graph, a.witness) <= e.k);
    CHECK(missing_edges(e.graph, b.witness) <= e.k);
    CHECK(a.size >= brute_force(e.graph, 0).size);
  }
}

TEST_CASE("restricted search honours required and allowed sets") {
  const Graph g = testing::seven_vertex_example();
  const VertexSet s{0};
  const VertexSet all{0, 1, 2, 3, 4, 5, 6};
  const auto r = brute_force(g, 1, s, all);
  CHECK(r.size == 5);
  CHECK(std::find(r.witness.begin(), r.witness.end(), 0) != r.witness.end());
  CHECK(brute_force_bitmask(g, 1, s, all).size == 5);
  // {v1, v4} already misses one edge; with k = 0 nothing is feasible.
  const VertexSet bad{1, 4};
  CHECK(brute_force(g, 0, bad, all).size == 0);
  CHECK(brute_force(g, 0, bad, all).witness.empty());
}

TEST_CASE("oracles refuse graphs beyond their size limits") {
  const Graph big = testing::random_graph(kOracleMaxVertices + 1, 0.5, 1);
  CHECK_THROWS_AS(brute_force(big, 1), OracleRefused);
  const Graph mid = testing::random_graph(kBitmaskOracleMaxVertices + 1, 0.5, 1);
  CHECK_THROWS_AS(brute_force_bitmask(mid, 1), OracleRefused);
}
