#include <doctest.h>

#include "oracles/brute.hpp"

#include "crossmin/crossings.hpp"
#include "crossmin/generators.hpp"
#include "crossmin/mover.hpp"

#include <set>

using namespace crossmin;

namespace {

Drawing random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  auto g = std::make_shared<const Graph>(random_graph(n, m, rng));
  return random_drawing(g, rng);
}

}  // namespace

TEST_CASE("strategy names and presets") {
  CHECK(parse_strategy("restricted") == Strategy::Restricted);
  CHECK(parse_strategy("weighted") == Strategy::Weighted);
  CHECK(parse_strategy("primal") == Strategy::Primal);
  CHECK_FALSE(parse_strategy("other"));
  CHECK(to_string(Strategy::Weighted) == "weighted");
  const MoveConfig s512 = MoveConfig::S512();
  CHECK(s512.samples == 512);
  CHECK(s512.points == 1);
  CHECK(s512.degree_cap == 100);
  CHECK(s512.strategy == Strategy::Restricted);
  CHECK(MoveConfig::R512().points == 1000);
  CHECK(MoveConfig::W512().strategy == Strategy::Weighted);
  CHECK(MoveConfig::R0().strategy == Strategy::Primal);
  CHECK(MoveConfig::named("R512")->samples == 512);
  CHECK_FALSE(MoveConfig::named("X1"));
  MoveConfig bad = MoveConfig::S512();
  bad.points = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("vertex order by descending crossings with id ties") {
  const std::vector<std::uint64_t> cr{3, 5, 3, 0, 5};
  CHECK(order_vertices(cr) == std::vector<VertexId>{1, 4, 0, 2, 3});
}

TEST_CASE("primal candidates lie in the box") {
  std::mt19937_64 rng(1);
  const Drawing d = random_instance(rng, 10, 20);
  const BoundingBox box = movement_square(d);
  MoveConfig cfg = MoveConfig::R0();
  cfg.points = 200;
  const auto c = candidate_positions(d, 0, cfg, box, rng);
  CHECK(c.size() == 200);
  for (const Point& p : c) CHECK(box.contains(p));
}

TEST_CASE("restricted candidates with the full edge set hit minimum faces") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Drawing d = random_instance(rng, 10, 20);
    const BoundingBox box = movement_square(d);
    MoveConfig cfg = MoveConfig::full_sample();
    cfg.points = 20;
    const VertexId v = static_cast<VertexId>(trial);
    if (d.graph().degree(v) == 0) continue;
    const auto c = candidate_positions(d, v, cfg, box, rng);
    REQUIRE(!c.empty());
    std::set<std::uint64_t> scores;
    for (const Point& p : c) scores.insert(oracle::brute_count_at(d, v, p));
    CHECK(scores.size() == 1);
    std::uniform_real_distribution<double> ux(box.min().x(), box.max().x());
    std::uniform_real_distribution<double> uy(box.min().y(), box.max().y());
    for (int k = 0; k < 300; ++k) {
      const Point p(ux(rng), uy(rng));
      CHECK(count_vertex_at(d, v, p) >= *scores.begin());
    }
  }
}

TEST_CASE("weighted candidates cover several faces") {
  std::mt19937_64 rng(3);
  const Drawing d = random_instance(rng, 12, 30);
  const BoundingBox box = movement_square(d);
  MoveConfig cfg = MoveConfig::W512();
  cfg.points = 300;
  VertexId v = 0;
  while (d.graph().degree(v) < 3) ++v;
  const auto c = candidate_positions(d, v, cfg, box, rng);
  CHECK(c.size() == 300);
  std::set<std::uint64_t> scores;
  for (const Point& p : c) scores.insert(count_vertex_at(d, v, p));
  CHECK(scores.size() > 1);
}

TEST_CASE("defect detection") {
  auto g = std::make_shared<const Graph>(Graph(4, {{0, 1}, {2, 3}}));
  Eigen::Matrix2Xd p(2, 4);
  p << 0, 1, 0, 1, 0, 0, 1, 1;
  const Drawing d(g, p);
  CHECK(creates_defect(d, 0, Point(0, 1)));      // onto vertex 2
  CHECK(creates_defect(d, 0, Point(0.5, 1)));    // onto edge 2-3
  CHECK(creates_defect(d, 0, Point(-1, 2)));     // spoke from 1 through vertex 2
  CHECK_FALSE(creates_defect(d, 0, Point(0.3, 0.2)));
}

TEST_CASE("move_vertex never worsens and records consistently") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Drawing d = random_instance(rng, 12, 28);
    const BoundingBox box = movement_square(d);
    for (const MoveConfig& base : {MoveConfig::R0(), MoveConfig::S512(), MoveConfig::W512()}) {
      MoveConfig cfg = base;
      cfg.points = std::min<std::size_t>(cfg.points, 50);
      const VertexId v = static_cast<VertexId>(trial);
      const std::uint64_t before = count_all(d).total;
      const MoveRecord r = move_vertex(d, v, cfg, box, rng);
      const std::uint64_t after = count_all(d).total;
      CHECK(after + r.old_crossings == before + r.new_crossings);
      CHECK(r.new_crossings <= r.old_crossings);
      CHECK(d.position(v) == r.new_position);
      if (!r.accepted) CHECK(r.new_position == r.old_position);
      CHECK(box.contains(d.position(v)));
    }
  }
}

TEST_CASE("degree cap splits neighbors into groups") {
  std::mt19937_64 rng(5);
  // A hub with 12 neighbors and some obstacles.
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= 12; ++u) edges.push_back({0, u});
  for (VertexId u = 1; u < 12; u += 2) edges.push_back({u, u + 1});
  auto g = std::make_shared<const Graph>(Graph(13, edges));
  Drawing d = random_drawing(g, rng);
  MoveConfig cfg = MoveConfig::S512();
  cfg.degree_cap = 5;
  const MoveRecord r = move_vertex(d, 0, cfg, movement_square(d), rng);
  // ceil(12 / 5) groups with one point each.
  CHECK(r.candidates == 3);
}

TEST_CASE("minimize is monotone and deterministic") {
  std::mt19937_64 rng(6);
  const Drawing start = random_instance(rng, 15, 35);
  MoveConfig cfg = MoveConfig::S512();
  cfg.passes = 3;
  cfg.seed = 9;
  Drawing a = start, b = start;
  const MoveReport ra = minimize(a, cfg);
  const MoveReport rb = minimize(b, cfg);
  CHECK(ra.consistent());
  CHECK(a.positions() == b.positions());
  REQUIRE(ra.passes.size() == 3);
  CHECK(ra.passes.back().crossings_after <= ra.passes.front().crossings_before);
  CHECK(ra.passes.back().crossings_after == oracle::brute_crossings(a).total);
  for (std::size_t i = 1; i < ra.passes.size(); ++i) {
    CHECK(ra.passes[i].crossings_before == ra.passes[i - 1].crossings_after);
  }
  CHECK(ra.moves.size() == 3 * 15);
}

TEST_CASE("minimize on convex K5") {
  Drawing d = convex_complete_drawing(5);
  MoveConfig cfg = MoveConfig::full_sample();
  cfg.passes = 3;
  const MoveReport r = minimize(d, cfg);
  CHECK(r.consistent());
  CHECK(r.passes.back().crossings_after < 5);
  CHECK(r.passes.back().crossings_after <= 3);
}
