#include "crossmin/geometry.hpp"

#include "crossmin/detail/filtered.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace crossmin {

namespace detail {
std::atomic<std::uint64_t> exact_fallbacks{0};
}  // namespace detail

namespace {

std::atomic<std::uint64_t> intersection_coordinates{0};

using detail::robust_sign;

bool in_box_of(const Segment& s, const Point& p) {
  const auto [xlo, xhi] = std::minmax(s.source().x(), s.target().x());
  const auto [ylo, yhi] = std::minmax(s.source().y(), s.target().y());
  return xlo <= p.x() && p.x() <= xhi && ylo <= p.y() && p.y() <= yhi;
}

bool boxes_disjoint(const Segment& a, const Segment& b) {
  // Sources are lexicographic minima, so x ranges are [source.x, target.x].
  if (a.target().x() < b.source().x() || b.target().x() < a.source().x()) return true;
  const auto [ay0, ay1] = std::minmax(a.source().y(), a.target().y());
  const auto [by0, by1] = std::minmax(b.source().y(), b.target().y());
  return ay1 < by0 || by1 < ay0;
}

// Upper half-plane (angle in [0, pi)) gets 0, the rest 1.
int half_plane(const Point& from, const Point& to) {
  if (to.y() > from.y()) return 0;
  if (to.y() == from.y() && to.x() > from.x()) return 0;
  return 1;
}

}  // namespace

Point checked_point(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("point coordinates must be finite");
  }
  return {x, y};
}

Segment::Segment(const Point& a, const Point& b) {
  if (a == b) throw std::invalid_argument("segment endpoints coincide");
  if (lex_less(a, b)) {
    source_ = a;
    target_ = b;
  } else {
    source_ = b;
    target_ = a;
  }
}

BoundingBox make_box(const Point& min_corner, const Point& max_corner) {
  if (!(min_corner.x() < max_corner.x() && min_corner.y() < max_corner.y())) {
    throw std::invalid_argument("bounding box must have positive extent");
  }
  return BoundingBox(min_corner, max_corner);
}

Orientation orient(const Point& p, const Point& q, const Point& r) {
  // Static filter with the classic ccwerrboundA constant before the general path.
  const double l = (q.x() - p.x()) * (r.y() - p.y());
  const double rr = (q.y() - p.y()) * (r.x() - p.x());
  const double det = l - rr;
  const double bound = 3.3306690738754716e-16 * (std::abs(l) + std::abs(rr));
  if (det > bound) return Orientation::Left;
  if (-det > bound) return Orientation::Right;
  const int s = robust_sign([&](auto lift) {
    using T = decltype(lift(0.0));
    T v = (lift(q.x()) - lift(p.x())) * (lift(r.y()) - lift(p.y())) -
          (lift(q.y()) - lift(p.y())) * (lift(r.x()) - lift(p.x()));
    return v;
  });
  return static_cast<Orientation>(s);
}

int cross_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
  return robust_sign([&](auto lift) {
    using T = decltype(lift(0.0));
    T v = (lift(b.x()) - lift(a.x())) * (lift(d.y()) - lift(c.y())) -
          (lift(b.y()) - lift(a.y())) * (lift(d.x()) - lift(c.x()));
    return v;
  });
}

bool segments_intersect(const Segment& a, const Segment& b, IntersectionMode mode) {
  if (boxes_disjoint(a, b)) return false;
  const int o1 = static_cast<int>(orient(a.source(), a.target(), b.source()));
  const int o2 = static_cast<int>(orient(a.source(), a.target(), b.target()));
  if (o1 * o2 > 0) return false;
  const int o3 = static_cast<int>(orient(b.source(), b.target(), a.source()));
  const int o4 = static_cast<int>(orient(b.source(), b.target(), a.target()));
  if (o3 * o4 > 0) return false;
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (mode == IntersectionMode::Proper) return false;
  return (o1 == 0 && in_box_of(a, b.source())) || (o2 == 0 && in_box_of(a, b.target())) ||
         (o3 == 0 && in_box_of(b, a.source())) || (o4 == 0 && in_box_of(b, a.target()));
}

bool on_segment(const Point& p, const Segment& s) {
  return in_box_of(s, p) && orient(s.source(), s.target(), p) == Orientation::Collinear;
}

bool collinear_overlap(const Segment& a, const Segment& b) {
  if (orient(a.source(), a.target(), b.source()) != Orientation::Collinear ||
      orient(a.source(), a.target(), b.target()) != Orientation::Collinear) {
    return false;
  }
  const Point& lo = lex_less(a.source(), b.source()) ? b.source() : a.source();
  const Point& hi = lex_less(a.target(), b.target()) ? a.target() : b.target();
  return lex_less(lo, hi);
}

AlongOrder intersection_order_along_unchecked(const Segment& s, const Segment& a,
                                              const Segment& b) {
  const Point& o = s.source();
  const Point& e = s.target();
  const int den_a = cross_sign(o, e, a.source(), a.target());
  const int den_b = cross_sign(o, e, b.source(), b.target());
  // t_a - t_b has the sign of (num_a * den_b - num_b * den_a) / (den_a * den_b)
  // with num_x = (x.source - o) x dir(x) and den_x = dir(s) x dir(x).
  const int num = robust_sign([&](auto lift) {
    using T = decltype(lift(0.0));
    const T ox = lift(o.x()), oy = lift(o.y());
    const T dsx = lift(e.x()) - ox, dsy = lift(e.y()) - oy;
    const T dax = lift(a.target().x()) - lift(a.source().x());
    const T day = lift(a.target().y()) - lift(a.source().y());
    const T dbx = lift(b.target().x()) - lift(b.source().x());
    const T dby = lift(b.target().y()) - lift(b.source().y());
    const T num_a = (lift(a.source().x()) - ox) * day - (lift(a.source().y()) - oy) * dax;
    const T num_b = (lift(b.source().x()) - ox) * dby - (lift(b.source().y()) - oy) * dbx;
    const T dena = dsx * day - dsy * dax;
    const T denb = dsx * dby - dsy * dbx;
    T v = num_a * denb - num_b * dena;
    return v;
  });
  const int sign = num * den_a * den_b;
  return static_cast<AlongOrder>(sign);
}

AlongOrder intersection_order_along(const Segment& s, const Segment& a, const Segment& b) {
  for (const Segment* x : {&a, &b}) {
    if (!segments_intersect(s, *x, IntersectionMode::Closed)) {
      throw std::invalid_argument("intersection_order_along: segment misses s");
    }
    if (cross_sign(s.source(), s.target(), x->source(), x->target()) == 0) {
      throw std::invalid_argument("intersection_order_along: segment parallel to s");
    }
  }
  return intersection_order_along_unchecked(s, a, b);
}

int compare_direction_angle(const SegmentEnd& a, const SegmentEnd& b) {
  const Point& af = a.forward ? a.segment.source() : a.segment.target();
  const Point& at = a.forward ? a.segment.target() : a.segment.source();
  const Point& bf = b.forward ? b.segment.source() : b.segment.target();
  const Point& bt = b.forward ? b.segment.target() : b.segment.source();
  const int ha = half_plane(af, at);
  const int hb = half_plane(bf, bt);
  if (ha != hb) return ha < hb ? -1 : 1;
  return -cross_sign(af, at, bf, bt);
}

std::vector<std::size_t> angular_order_around(std::span<const SegmentEnd> ends) {
  std::vector<std::size_t> order(ends.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return compare_direction_angle(ends[i], ends[j]) < 0;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (compare_direction_angle(ends[order[k - 1]], ends[order[k]]) == 0) {
      throw DegeneracyError("angular_order_around: two ends share a direction");
    }
  }
  return order;
}

std::optional<Segment> clip_to_box(const Point& origin, const Vector& direction,
                                   const BoundingBox& box) {
  if (direction.x() == 0.0 && direction.y() == 0.0) {
    throw std::invalid_argument("clip_to_box: zero direction");
  }
  double t_enter = 0.0;
  double t_exit = std::numeric_limits<double>::infinity();
  int enter_axis = -1;
  int exit_axis = -1;
  for (int k = 0; k < 2; ++k) {
    const double o = origin[k];
    const double d = direction[k];
    const double lo = box.min()[k];
    const double hi = box.max()[k];
    if (d == 0.0) {
      if (o < lo || o > hi) return std::nullopt;
      continue;
    }
    double t0 = (lo - o) / d;
    double t1 = (hi - o) / d;
    if (t0 > t1) std::swap(t0, t1);
    if (t0 > t_enter) {
      t_enter = t0;
      enter_axis = k;
    }
    if (t1 < t_exit) {
      t_exit = t1;
      exit_axis = k;
    }
  }
  if (!(t_enter < t_exit)) return std::nullopt;

  const auto place = [&](double t, int axis, bool exiting) {
    Point p = origin + t * direction;
    for (int k = 0; k < 2; ++k) p[k] = std::clamp(p[k], box.min()[k], box.max()[k]);
    if (axis >= 0) {
      const bool towards_max = (direction[axis] > 0.0) == exiting;
      p[axis] = towards_max ? box.max()[axis] : box.min()[axis];
    }
    return p;
  };
  const Point start = enter_axis < 0 ? origin : place(t_enter, enter_axis, false);
  const Point end = place(t_exit, exit_axis, true);
  if (start == end) return std::nullopt;
  return Segment(start, end);
}

Point line_intersection(const Segment& a, const Segment& b) {
  intersection_coordinates.fetch_add(1, std::memory_order_relaxed);
  using L = long double;
  const L ax = a.source().x(), ay = a.source().y();
  const L dax = L(a.target().x()) - ax, day = L(a.target().y()) - ay;
  const L bx = b.source().x(), by = b.source().y();
  const L dbx = L(b.target().x()) - bx, dby = L(b.target().y()) - by;
  const L den = dax * dby - day * dbx;
  if (den == 0) throw DegeneracyError("line_intersection: parallel segments");
  const L t = ((bx - ax) * dby - (by - ay) * dbx) / den;
  return {static_cast<double>(ax + t * dax), static_cast<double>(ay + t * day)};
}

std::uint64_t intersection_coordinate_count() {
  return intersection_coordinates.load(std::memory_order_relaxed);
}

std::uint64_t exact_fallback_count() {
  return detail::exact_fallbacks.load(std::memory_order_relaxed);
}

}  // namespace crossmin
