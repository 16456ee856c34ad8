#pragma once

// Exact rational geometry used only by test oracles. Nothing here calls the
// library's predicates.

#include <gmpxx.h>

#include <compare>
#include <utility>

namespace oracle {

struct QPoint {
  mpq_class x, y;

  QPoint() = default;
  QPoint(double px, double py) : x(px), y(py) {}
  QPoint(mpq_class px, mpq_class py) : x(std::move(px)), y(std::move(py)) {}

  friend bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const QPoint& a, const QPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline int sign(const mpq_class& v) { return sgn(v); }

inline mpq_class cross(const QPoint& o, const QPoint& a, const QPoint& b) {
  return mpq_class((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x));
}

inline int orient(const QPoint& p, const QPoint& q, const QPoint& r) { return sign(cross(p, q, r)); }

/// Closed segment [a, b] contains p.
inline bool on_closed(const QPoint& a, const QPoint& b, const QPoint& p) {
  if (orient(a, b, p) != 0) return false;
  const auto [xlo, xhi] = std::minmax(a.x, b.x);
  const auto [ylo, yhi] = std::minmax(a.y, b.y);
  return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

/// Interiors cross in one point.
inline bool proper_cross(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

inline bool closed_intersect(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  if (proper_cross(a, b, c, d)) return true;
  return on_closed(a, b, c) || on_closed(a, b, d) || on_closed(c, d, a) || on_closed(c, d, b);
}

/// Parameter t with a + t (b - a) on the line through c, d; requires
/// non-parallel lines.
inline mpq_class line_param(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  const mpq_class dax = b.x - a.x, day = b.y - a.y;
  const mpq_class dcx = d.x - c.x, dcy = d.y - c.y;
  const mpq_class den = dax * dcy - day * dcx;
  const mpq_class num = (c.x - a.x) * dcy - (c.y - a.y) * dcx;
  return mpq_class(num / den);
}

inline QPoint at_param(const QPoint& a, const QPoint& b, const mpq_class& t) {
  return {mpq_class(a.x + t * (b.x - a.x)), mpq_class(a.y + t * (b.y - a.y))};
}

/// Counterclockwise angle order of direction vectors starting at angle 0;
/// returns <0, 0, >0.
inline int compare_angle(const mpq_class& ax, const mpq_class& ay, const mpq_class& bx,
                         const mpq_class& by) {
  const auto half = [](const mpq_class& x, const mpq_class& y) {
    return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
  };
  const int ha = half(ax, ay), hb = half(bx, by);
  if (ha != hb) return ha - hb;
  return -sign(mpq_class(ax * by - ay * bx));
}

}  // namespace oracle
