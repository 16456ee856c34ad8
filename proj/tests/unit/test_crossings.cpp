#include <doctest.h>

#include "oracles/brute.hpp"

#include "crossmin/crossings.hpp"
#include "crossmin/generators.hpp"

#include <algorithm>
#include <set>

using namespace crossmin;

namespace {

std::uint64_t choose4(std::uint64_t n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; }

Drawing grid_drawing(std::mt19937_64& rng, std::size_t n, std::size_t m, int side) {
  auto g = std::make_shared<const Graph>(random_graph(n, m, rng));
  std::uniform_int_distribution<int> c(0, side);
  std::set<std::pair<int, int>> used;
  Eigen::Matrix2Xd p(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::pair<int, int> xy;
    do xy = {c(rng), c(rng)};
    while (!used.insert(xy).second);
    p.col(i) = Point(xy.first, xy.second);
  }
  return Drawing(g, p);
}

}  // namespace

TEST_CASE("convex complete graphs have C(n,4) crossings") {
  for (std::size_t n = 4; n <= 9; ++n) {
    const CrossingTally t = count_all(convex_complete_drawing(n));
    CHECK(t.total == choose4(n));
    CHECK(t.consistent());
  }
}

TEST_CASE("count_all matches the rational brute force on degenerate drawings") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    // Small integer grid: many collinear and touching configurations.
    const Drawing d = grid_drawing(rng, 12, 24, 4);
    const CrossingTally t = count_all(d);
    const oracle::BruteTally b = oracle::brute_crossings(d);
    CHECK(t.total == b.total);
    CHECK(t.per_vertex == b.per_vertex);
    CHECK(t.consistent());
  }
}

TEST_CASE("count_vertex_at matches brute force") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-0.5, 1.5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = std::make_shared<const Graph>(random_graph(10, 20, rng));
    const Drawing d = random_drawing(g, rng);
    for (VertexId v = 0; v < 10; ++v) {
      const Point p(u(rng), u(rng));
      CHECK(count_vertex_at(d, v, p) == oracle::brute_count_at(d, v, p));
    }
  }
}

TEST_CASE("count_vertex_at at the current position sums to the tally") {
  std::mt19937_64 rng(23);
  auto g = std::make_shared<const Graph>(random_graph(15, 40, rng));
  const Drawing d = random_drawing(g, rng);
  const CrossingTally t = count_all(d);
  for (VertexId v = 0; v < 15; ++v) CHECK(count_vertex_at(d, v, d.position(v)) == t.per_vertex[v]);
}

TEST_CASE("cross_pair") {
  const Drawing d = convex_complete_drawing(4);
  // Edges (0,2) and (1,3) are the diagonals.
  const auto& edges = d.graph().edges();
  const auto find = [&](VertexId a, VertexId b) {
    return static_cast<EdgeId>(std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
                                 return (e.u == a && e.v == b) || (e.u == b && e.v == a);
                               }) -
                               edges.begin());
  };
  CHECK(cross_pair(d, find(0, 2), find(1, 3)) == 1);
  CHECK(cross_pair(d, find(0, 1), find(2, 3)) == 0);
  CHECK(cross_pair(d, find(0, 1), find(1, 2)) == 0);
  CHECK_THROWS_AS(cross_pair(d, 0, 0), std::invalid_argument);
}

TEST_CASE("enumerate_intersections matches all-pairs closed tests") {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> c(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Segment> s;
    while (s.size() < 30) {
      const Point a(c(rng), c(rng)), b(c(rng), c(rng));
      if (a != b) s.emplace_back(a, b);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> expected;
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      for (std::uint32_t j = i + 1; j < s.size(); ++j) {
        if (oracle::closed_intersect(oracle::q(s[i].source()), oracle::q(s[i].target()),
                                     oracle::q(s[j].source()), oracle::q(s[j].target()))) {
          expected.emplace_back(i, j);
        }
      }
    }
    CHECK(enumerate_intersections(s) == expected);
  }
}

TEST_CASE("co-crossing counts complement crossings") {
  std::mt19937_64 rng(25);
  auto g = std::make_shared<const Graph>(random_graph(12, 30, rng));
  const Drawing d = random_drawing(g, rng);
  for (VertexId v = 0; v < 12; ++v) {
    const std::uint64_t pairs = g->degree(v) * (g->edge_count() - 1);
    // Pairs of v's edges with each other never cross and count as co-crossing.
    CHECK(co_crossing(d, v) + count_vertex_at(d, v, d.position(v)) == pairs);
    std::vector<EdgeId> all(g->edge_count());
    for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
    CHECK(estimate_co_crossing(d, v, d.position(v), all) ==
          doctest::Approx(static_cast<double>(co_crossing(d, v))));
  }
}

TEST_CASE("sampling without replacement") {
  std::mt19937_64 rng(26);
  std::vector<EdgeId> pool{3, 5, 7, 9, 11};
  const auto s = sample_without_replacement(pool, 3, rng);
  CHECK(s.size() == 3);
  CHECK(std::set<EdgeId>(s.begin(), s.end()).size() == 3);
  for (EdgeId e : s) CHECK(std::find(pool.begin(), pool.end(), e) != pool.end());
  CHECK(sample_without_replacement(pool, 10, rng).size() == 5);
}
