#pragma once

#include "crossmin/arrangement.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace crossmin {

/// Crossing count per face cycle of a bloated dual.
struct FaceCounts {
  static constexpr std::int64_t kUncounted = -1;

  /// Indexed by face id of the FaceLabels the counts were propagated over.
  /// The outer face and faces unreachable from the seed stay kUncounted.
  std::vector<std::int64_t> count;
  std::uint32_t seed_face = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;

  bool counted(std::uint32_t face) const { return count[face] != kUncounted; }
};

/// Thrown when propagation would produce a negative count.
class InconsistentCountError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Triangle = std::array<Point, 3>;

/// Ear-clipping triangulation of a polygon given in either orientation.
/// Collinear and duplicate corners are dropped. Falls back to a fan when no
/// ear can be certified (nearly degenerate input).
std::vector<Triangle> triangulate(std::span<const Point> polygon);

double triangle_area(const Triangle& t);

/// Centroid of the largest triangle of the triangulation, or nullopt when the
/// polygon has no area.
std::optional<Point> interior_point(std::span<const Point> polygon);

/// First face (by id) other than the outer face whose polygon winds
/// counterclockwise with at least `min_area_fraction` of the box area;
/// otherwise the largest such face.
std::uint32_t choose_seed_face(const BloatedDual& dual, const FaceLabels& faces,
                               const BoundingBox& box, double min_area_fraction = 1e-6);

/// Places v at an interior point of the polygon and counts crossings of the
/// spokes to `neighbors` against `obstacles`. Throws std::invalid_argument for
/// a polygon without area.
std::int64_t seed_count(const Drawing& d, VertexId v, std::span<const Point> polygon,
                        std::span<const VertexId> neighbors, std::span<const EdgeId> obstacles);

/// seed_count over every neighbor of v.
std::int64_t seed_count(const Drawing& d, VertexId v, std::span<const Point> polygon,
                        std::span<const EdgeId> obstacles);

/// Breadth-first propagation of counts across cross edges, starting from the
/// seed face. The outer face is never entered.
FaceCounts propagate_counts(const BloatedDual& dual, const FaceLabels& faces,
                            std::uint32_t seed_face, std::int64_t seed);

/// Counted faces achieving the minimum, ascending by face id.
std::vector<std::pair<std::uint32_t, std::int64_t>> min_faces(const FaceCounts& counts);

/// Uniform point inside the polygon. Throws std::invalid_argument when the
/// polygon has no area.
Point sample_point_in_face(std::span<const Point> polygon, std::mt19937_64& rng);

/// Samples from a precomputed triangulation (area-weighted triangle, then
/// uniform barycentric coordinates).
Point sample_point_in_triangles(std::span<const Triangle> triangles, std::mt19937_64& rng);

/// Counted face with probability proportional to 2^(min - count).
std::uint32_t weighted_face_sample(const FaceCounts& counts, std::mt19937_64& rng);

/// Sampling weights used by weighted_face_sample, normalized to sum 1.
std::vector<double> face_weights(const FaceCounts& counts);

}  // namespace crossmin
