#include <doctest.h>

#include "oracles/rational.hpp"

#include "crossmin/geometry.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace crossmin;

namespace {

oracle::QPoint q(const Point& p) { return {p.x(), p.y()}; }

}  // namespace

TEST_CASE("segment normalizes endpoint order") {
  const Segment s(Point(1, 0), Point(0, 5));
  CHECK(s.source() == Point(0, 5));
  CHECK(s.target() == Point(1, 0));
  CHECK_THROWS_AS(Segment(Point(1, 1), Point(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(checked_point(NAN, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_box(Point(0, 0), Point(0, 1)), std::invalid_argument);
}

TEST_CASE("orient agrees with rational arithmetic near collinearity") {
  // Classic grid of tiny offsets around a nearly collinear triple.
  const double eps = std::ldexp(1.0, -53);
  const Point q1(12, 12), r(24, 24);
  for (int i = 0; i < 64; ++i) {
    for (int j = 0; j < 64; ++j) {
      const Point p(0.5 + i * eps, 0.5 + j * eps);
      CHECK(static_cast<int>(orient(p, q1, r)) == oracle::orient(q(p), q(q1), q(r)));
    }
  }
}

TEST_CASE("orient agrees with rational arithmetic on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 2000; ++k) {
    const Point a(u(rng), u(rng)), b(u(rng), u(rng));
    // Third point on the line through a, b, rounded to doubles.
    const double t = u(rng);
    const Point c = a + t * (b - a);
    CHECK(static_cast<int>(orient(a, b, c)) == oracle::orient(q(a), q(b), q(c)));
  }
}

TEST_CASE("segment intersection modes") {
  const Segment a(Point(0, 0), Point(2, 2));
  const Segment b(Point(0, 2), Point(2, 0));
  const Segment touch(Point(1, 1), Point(3, 0));
  const Segment overlap(Point(1, 1), Point(3, 3));
  const Segment apart(Point(5, 5), Point(6, 7));
  CHECK(segments_intersect(a, b, IntersectionMode::Proper));
  CHECK_FALSE(segments_intersect(a, touch, IntersectionMode::Proper));
  CHECK(segments_intersect(a, touch, IntersectionMode::Closed));
  CHECK(segments_intersect(a, overlap, IntersectionMode::Closed));
  CHECK_FALSE(segments_intersect(a, overlap, IntersectionMode::Proper));
  CHECK(collinear_overlap(a, overlap));
  CHECK_FALSE(collinear_overlap(a, Segment(Point(2, 2), Point(3, 3))));
  CHECK_FALSE(segments_intersect(a, apart, IntersectionMode::Closed));
  CHECK(on_segment(Point(1, 1), a));
  CHECK_FALSE(on_segment(Point(3, 3), a));
}

TEST_CASE("proper intersection matches rational oracle on random segments") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> grid(0, 4);
  for (int k = 0; k < 3000; ++k) {
    const Point a(grid(rng), grid(rng)), b(grid(rng), grid(rng));
    const Point c(grid(rng), grid(rng)), d(grid(rng), grid(rng));
    if (a == b || c == d) continue;
    const Segment s(a, b), t(c, d);
    CHECK(segments_intersect(s, t, IntersectionMode::Proper) ==
          oracle::proper_cross(q(a), q(b), q(c), q(d)));
    CHECK(segments_intersect(s, t, IntersectionMode::Closed) ==
          oracle::closed_intersect(q(a), q(b), q(c), q(d)));
  }
}

TEST_CASE("order along a segment matches rational parameters") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  int compared = 0;
  while (compared < 1000) {
    const Segment s(Point(u(rng), u(rng)), Point(u(rng), u(rng)));
    const Segment a(Point(u(rng), u(rng)), Point(u(rng), u(rng)));
    const Segment b(Point(u(rng), u(rng)), Point(u(rng), u(rng)));
    if (!segments_intersect(s, a, IntersectionMode::Proper) ||
        !segments_intersect(s, b, IntersectionMode::Proper)) {
      continue;
    }
    ++compared;
    const auto ta = oracle::line_param(q(s.source()), q(s.target()), q(a.source()), q(a.target()));
    const auto tb = oracle::line_param(q(s.source()), q(s.target()), q(b.source()), q(b.target()));
    const int expected = ta < tb ? -1 : (ta == tb ? 0 : 1);
    CHECK(static_cast<int>(intersection_order_along(s, a, b)) == expected);
  }
}

TEST_CASE("order along detects equal points exactly") {
  // Three segments through (1, 1), one with slope -1/3.
  const Segment s(Point(0, 0), Point(3, 3));
  const Segment a(Point(0, 2), Point(2, 0));
  const Segment b(Point(1, 0), Point(1, 3));
  const Segment c(Point(0.25, 1.25), Point(1.75, 0.75));
  CHECK(intersection_order_along(s, a, b) == AlongOrder::Equal);
  CHECK(intersection_order_along(s, a, c) == AlongOrder::Equal);
  CHECK_THROWS_AS(intersection_order_along(s, a, Segment(Point(4, 0), Point(5, 1))),
                  std::invalid_argument);
}

TEST_CASE("angular order matches atan2 on integer directions") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SegmentEnd> ends;
    std::vector<long double> angles;
    const Point o(coord(rng), coord(rng));
    while (ends.size() < 6) {
      const Point dir(coord(rng), coord(rng));
      if (dir == Point::Zero()) continue;
      long double ang = std::atan2(static_cast<long double>(dir.y()), static_cast<long double>(dir.x()));
      if (ang < 0) ang += 2 * 3.14159265358979323846264338327950288L;
      bool clash = false;
      for (long double a : angles) clash |= std::fabs(a - ang) < 1e-12L;
      if (clash) continue;
      angles.push_back(ang);
      // The direction flag follows from how the segment normalizes.
      const Point far = o + dir;
      const Segment seg(o, far);
      ends.push_back({seg, seg.source() == o});
    }
    std::vector<std::size_t> expected(ends.size());
    std::iota(expected.begin(), expected.end(), 0u);
    std::sort(expected.begin(), expected.end(),
              [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });
    CHECK(angular_order_around(ends) == expected);
  }
}

TEST_CASE("angular order rejects coinciding directions") {
  const Segment a(Point(0, 0), Point(1, 1));
  const Segment b(Point(0, 0), Point(2, 2));
  const std::vector<SegmentEnd> ends{{a, true}, {b, true}};
  CHECK_THROWS_AS(angular_order_around(ends), DegeneracyError);
}

TEST_CASE("ray clipping snaps onto the exit wall") {
  const BoundingBox box = make_box(Point(0, 0), Point(1, 1));
  const auto r = clip_to_box(Point(0.5, 0.5), Vector(1, 0.3), box);
  REQUIRE(r);
  CHECK((r->source() == Point(0.5, 0.5) || r->target() == Point(0.5, 0.5)));
  const Point exit = r->source() == Point(0.5, 0.5) ? r->target() : r->source();
  CHECK(exit.x() == 1.0);
  CHECK(exit.y() == doctest::Approx(0.65));
  CHECK_FALSE(clip_to_box(Point(2, 2), Vector(1, 0), box));
}

TEST_CASE("line_intersection is counted") {
  const auto before = intersection_coordinate_count();
  const Point p = line_intersection(Segment(Point(0, 0), Point(2, 2)), Segment(Point(0, 2), Point(2, 0)));
  CHECK(p.x() == doctest::Approx(1.0));
  CHECK(p.y() == doctest::Approx(1.0));
  CHECK(intersection_coordinate_count() == before + 1);
}
