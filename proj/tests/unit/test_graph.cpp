#include <doctest.h>

#include "oracles/brute.hpp"

#include "crossmin/generators.hpp"
#include "crossmin/graph.hpp"

#include <algorithm>
#include <set>

using namespace crossmin;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

bool connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto d = oracle::floyd_warshall(g);
  return (d.array() < std::numeric_limits<int>::max() / 8).all();
}

}  // namespace

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  const Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(g.degree(1) == 3);
  CHECK(g.neighbors(1).size() == 3);
  for (std::size_t k = 0; k < g.degree(1); ++k) {
    const Edge& e = g.edge(g.incident_edges(1)[k]);
    CHECK(e.other(1) == g.neighbors(1)[k]);
  }
}

TEST_CASE("drawing validates positions") {
  auto g = share(Graph(2, {{0, 1}}));
  CHECK_THROWS_AS(Drawing(g, Eigen::Matrix2Xd::Zero(2, 3)), std::invalid_argument);
  Eigen::Matrix2Xd p(2, 2);
  p << 0, INFINITY, 0, 1;
  CHECK_THROWS_AS(Drawing(g, p), std::invalid_argument);
}

TEST_CASE("preprocess keeps the largest component and peels leaves") {
  // Triangle 0-1-2 with a pendant path 2-3-4, plus a separate 4-cycle.
  const Graph g(9, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 5}});
  // The first component has more vertices.
  const PreprocessResult r = preprocess(g);
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 3);
  CHECK(r.original_id == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("preprocess ties go to the component with the smallest id") {
  const Graph g(6, {{3, 4}, {4, 5}, {3, 5}, {0, 1}, {1, 2}, {0, 2}});
  const PreprocessResult r = preprocess(g);
  CHECK(r.original_id == std::vector<VertexId>{0, 1, 2});
  CHECK_THROWS_AS(preprocess(Graph(3, {{0, 1}, {1, 2}})), EmptyGraphError);
}

TEST_CASE("preprocess result is connected with minimum degree two") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_graph(30, 35, rng);
    PreprocessResult r;
    try {
      r = preprocess(g);
    } catch (const EmptyGraphError&) {
      continue;
    }
    CHECK(connected(r.graph));
    for (VertexId v = 0; v < r.graph.vertex_count(); ++v) CHECK(r.graph.degree(v) >= 2);
    std::set<std::pair<VertexId, VertexId>> original;
    for (const Edge& e : g.edges()) original.emplace(std::minmax(e.u, e.v));
    for (const Edge& e : r.graph.edges()) {
      CHECK(original.count(std::minmax(r.original_id[e.u], r.original_id[e.v])) == 1);
    }
  }
}

TEST_CASE("movement square doubles the enclosing square") {
  auto g = share(Graph(3, {{0, 1}, {1, 2}}));
  Eigen::Matrix2Xd p(2, 3);
  p << 0, 4, 2, 0, 1, 2;
  const BoundingBox box = movement_square(Drawing(g, p));
  CHECK(box.min() == Point(-2, -3));
  CHECK(box.max() == Point(6, 5));
  const BoundingBox unit = movement_square(Drawing(g, Eigen::Matrix2Xd::Ones(2, 3)));
  CHECK(unit.sizes() == Point(1, 1));
}

TEST_CASE("position defects are detected and repaired") {
  auto g = share(Graph(5, {{0, 1}, {2, 3}, {3, 4}}));
  Eigen::Matrix2Xd p(2, 5);
  // Vertex 2 on edge 0-1, vertices 3 and 4 coincide.
  p << 0, 2, 1, 3, 3, 0, 0, 0, 1, 1;
  Drawing d(g, p);
  const PositionDefects defects = find_position_defects(d);
  CHECK_FALSE(defects.empty());
  CHECK(defects.coincident_pairs >= 1);
  CHECK(defects.vertex_on_edge >= 1);
  std::mt19937_64 rng(1);
  const int rounds = enforce_general_position(d, rng);
  CHECK(rounds >= 1);
  CHECK(find_position_defects(d).empty());
  CHECK((d.positions() - p).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("collinear overlap is a defect") {
  auto g = share(Graph(4, {{0, 1}, {2, 3}}));
  Eigen::Matrix2Xd p(2, 4);
  p << 0, 2, 1, 3, 0, 0, 0, 0;
  const PositionDefects defects = find_position_defects(Drawing(g, p));
  CHECK(defects.collinear_overlaps >= 1);
}

TEST_CASE("generators") {
  std::mt19937_64 rng(4);
  const Graph r = random_regular_graph(50, 3, rng);
  CHECK(r.edge_count() == 75);
  for (VertexId v = 0; v < 50; ++v) CHECK(r.degree(v) == 3);
  CHECK_THROWS_AS(random_regular_graph(5, 3, rng), std::invalid_argument);
  CHECK(complete_graph(6).edge_count() == 15);
  const Graph gm = random_graph(20, 40, rng);
  CHECK(gm.edge_count() == 40);
  CHECK(gm.vertex_count() == 20);
  const Drawing tri = grid_triangulation(4, 5, 0.2, rng);
  CHECK(tri.graph().vertex_count() == 20);
  // Planar: a triangulated grid has no crossings.
  CHECK(oracle::brute_crossings(tri).total == 0);
  CHECK(tri.graph().edge_count() == std::size_t{3 * 4 * 5 - 2 * 4 - 2 * 5 + 1});
}
