#pragma once

// Exact 2D predicates over double coordinates.
//
// Every combinatorial decision in the library (crossing tests, event order
// along a segment, angular order around a point) is a sign of a polynomial in
// the input coordinates. Those signs are evaluated with a forward-error filter
// first and re-evaluated in rational arithmetic only when the filter cannot
// certify them.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace crossmin {

template <class Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Vec2<double>;
using Vector = Vec2<double>;
using BoundingBox = Eigen::AlignedBox<double, 2>;

/// Thrown when an input violates the general-position assumptions a routine
/// relies on (coincident directions, a vertex on an obstacle, ...).
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Orientation : std::int8_t { Right = -1, Collinear = 0, Left = 1 };

inline Orientation operator-(Orientation o) {
  return static_cast<Orientation>(-static_cast<int>(o));
}

/// Throws std::invalid_argument unless both coordinates are finite.
Point checked_point(double x, double y);

/// Lexicographic (x, then y) order on points.
inline bool lex_less(const Point& a, const Point& b) {
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

/// A directed segment whose source is the lexicographically smaller endpoint.
class Segment {
 public:
  Segment() = default;
  /// Orders the endpoints; throws std::invalid_argument if they coincide.
  Segment(const Point& a, const Point& b);

  const Point& source() const { return source_; }
  const Point& target() const { return target_; }
  Vector direction() const { return target_ - source_; }

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  Point source_ = Point::Zero();
  Point target_ = Point::UnitX();
};

/// Throws std::invalid_argument unless min < max in both coordinates.
BoundingBox make_box(const Point& min_corner, const Point& max_corner);

Orientation orient(const Point& p, const Point& q, const Point& r);

/// Sign of the cross product ((b - a) x (d - c)) of two difference vectors.
int cross_sign(const Point& a, const Point& b, const Point& c, const Point& d);

enum class IntersectionMode { Proper, Closed };

/// Proper: the relative interiors cross in a single point.
/// Closed: any common point, including touching endpoints and overlap.
bool segments_intersect(const Segment& a, const Segment& b, IntersectionMode mode);

/// True if `p` lies on the closed segment `s`.
bool on_segment(const Point& p, const Segment& s);

/// True if the two segments are collinear and share more than one point.
bool collinear_overlap(const Segment& a, const Segment& b);

enum class AlongOrder : std::int8_t { ABeforeB = -1, Equal = 0, BBeforeA = 1 };

/// Order of the points where `a` and `b` meet the supporting line of `s`,
/// measured along the direction of `s`. Both must intersect `s` and neither
/// may be parallel to it; throws std::invalid_argument otherwise.
AlongOrder intersection_order_along(const Segment& s, const Segment& a, const Segment& b);

/// Same as intersection_order_along without the precondition checks.
AlongOrder intersection_order_along_unchecked(const Segment& s, const Segment& a,
                                              const Segment& b);

/// A segment leaving a shared event point, either along (`forward`) or against
/// the segment direction.
struct SegmentEnd {
  Segment segment;
  bool forward = true;
};

/// Counterclockwise order (starting at angle 0) of the directions of
/// segment ends that all emanate from one common point. Only the endpoint
/// data of each segment is used. Throws DegeneracyError when two ends point in
/// exactly the same direction.
std::vector<std::size_t> angular_order_around(std::span<const SegmentEnd> ends);

/// Three-way comparison of two directions by CCW angle in [0, 2pi); returns
/// -1, 0 or 1.
int compare_direction_angle(const SegmentEnd& a, const SegmentEnd& b);

/// The part of the ray origin + t * direction (t >= 0) inside the closed box.
/// The exit point is snapped onto the box wall it leaves through.
std::optional<Segment> clip_to_box(const Point& origin, const Vector& direction,
                                   const BoundingBox& box);

/// Intersection point of the supporting lines of two non-parallel segments.
/// This is the only routine that materializes intersection coordinates; every
/// call is counted.
Point line_intersection(const Segment& a, const Segment& b);

/// Number of line_intersection() calls made by this process so far.
std::uint64_t intersection_coordinate_count();

/// Number of predicate evaluations that needed the rational fallback so far.
std::uint64_t exact_fallback_count();

}  // namespace crossmin
