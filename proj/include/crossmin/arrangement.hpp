#pragma once

// Visibility boundaries of a vertex and the bloated dual of their arrangement.
//
// The bloated dual has one vertex per (sub-piece, side) pair. Every dual
// vertex owns three adjacency slots in one flat array:
//   slot 0  the opposite side of the same sub-piece (cross edge),
//   slot 1  the face corner at the sub-piece's source end,
//   slot 2  the face corner at the sub-piece's target end.
// Dual vertex 2k is the right side and 2k + 1 the left side of global
// sub-piece k. The whole structure is derived from which pieces meet and in
// what order; no intersection coordinate is formed while building it.

#include "crossmin/geometry.hpp"
#include "crossmin/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crossmin {

enum class PieceKind : std::uint8_t { ObstacleSegment, RayFromSource, RayFromTarget, BoxWall };
enum class Side : std::uint8_t { Right = 0, Left = 1 };
enum class ShadowSide : std::uint8_t { Right = 0, Left = 1, None = 2 };

inline constexpr std::uint32_t kNoId = 0xffffffffu;

struct PieceTag {
  VertexId neighbor = kNoId;
  EdgeId obstacle = kNoId;
  PieceKind kind = PieceKind::ObstacleSegment;
  friend bool operator==(const PieceTag&, const PieceTag&) = default;
};

/// A piece of some boundary Bd(u, e), or a wall of the clipping box.
struct TaggedPiece {
  Segment geometry;
  PieceTag tag;
  /// Side (relative to geometry's direction) on which segment u-p crosses e.
  ShadowSide shadow = ShadowSide::None;
  /// For box walls: the side facing away from the box.
  std::optional<Side> exterior;
};

struct Annotation {
  PieceTag tag;
  ShadowSide shadow = ShadowSide::None;
};

/// A maximal piece that no other piece overlaps collinearly; carries the
/// annotations of every input piece covering it.
struct Atom {
  Segment geometry;
  std::vector<Annotation> annotations;
  std::optional<Side> exterior;

  /// Change of the crossing count when moving from its left to its right side.
  int left_to_right_delta() const;
};

/// Side of the directed line through `s` on which `p` lies.
std::optional<Side> side_of(const Segment& s, const Point& p);

/// Closed segment clipped to the closed box; endpoints inside the box are kept
/// bit-exactly.
std::optional<Segment> clip_segment_to_box(const Segment& s, const BoundingBox& box);

/// The segment e and the two rays from its endpoints pointing away from u,
/// clipped to the box, with shadow sides set. Pieces that clip to nothing are
/// omitted, and so is everything when u is collinear with e (the shadow is
/// empty then). Throws DegeneracyError if u lies on the closed segment e.
std::vector<TaggedPiece> shadow_boundary(const Point& u, const Segment& e,
                                         const BoundingBox& box, VertexId neighbor = kNoId,
                                         EdgeId obstacle = kNoId);

/// The four walls of the box, exterior sides set.
std::vector<TaggedPiece> box_walls(const BoundingBox& box);

/// Boundaries Bd(u, e) for every u in `neighbors` and every obstacle e that is
/// incident to neither u nor v, followed by the box walls. Pairs whose line
/// passes through u contribute nothing.
std::vector<TaggedPiece> collect_pieces(const Drawing& d, VertexId v,
                                        std::span<const VertexId> neighbors,
                                        std::span<const EdgeId> obstacles,
                                        const BoundingBox& box);

/// collect_pieces over all neighbors of v.
std::vector<TaggedPiece> collect_pieces(const Drawing& d, VertexId v,
                                        std::span<const EdgeId> obstacles,
                                        const BoundingBox& box);

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

struct AtomizedPieces {
  std::vector<Atom> atoms;
  /// enumerate_intersections over the atom geometries.
  std::vector<IndexPair> intersections;
};

/// Splits collinear overlapping pieces at the union of their endpoints and
/// also returns the intersecting atom pairs.
AtomizedPieces atomize_and_intersect(std::span<const TaggedPiece> pieces);

std::vector<Atom> atomize_overlaps(std::span<const TaggedPiece> pieces);

/// Untagged atoms for plain segment sets (no two may overlap collinearly).
std::vector<Atom> plain_atoms(std::span<const Segment> segments);

class BloatedDual {
 public:
  static constexpr std::uint32_t kAbsent = kNoId;

  std::size_t piece_count() const { return segments_.size(); }
  std::size_t vertex_count() const { return adjacency_.size() / 3; }
  std::size_t sub_piece_count(std::uint32_t piece) const {
    return sub_offset_[piece + 1] - sub_offset_[piece];
  }
  /// Number of interior event points on a piece.
  std::size_t event_count(std::uint32_t piece) const { return sub_piece_count(piece) - 1; }

  std::uint32_t vertex(std::uint32_t piece, std::uint32_t sub, Side side) const {
    return 2 * (sub_offset_[piece] + sub) + static_cast<std::uint32_t>(side);
  }
  static Side side(std::uint32_t x) { return (x & 1u) ? Side::Left : Side::Right; }
  std::uint32_t piece_of(std::uint32_t x) const { return piece_of_sub_[x / 2]; }
  std::uint32_t sub_of(std::uint32_t x) const { return x / 2 - sub_offset_[piece_of(x)]; }

  std::uint32_t slot(std::uint32_t x, int k) const { return adjacency_[3 * x + k]; }
  std::uint32_t cross(std::uint32_t x) const { return adjacency_[3 * x]; }
  /// Next vertex on the face cycle of x, walking with the face on the left.
  std::uint32_t face_successor(std::uint32_t x) const {
    return adjacency_[3 * x + (side(x) == Side::Left ? 2 : 1)];
  }

  std::span<const std::uint32_t> adjacency() const { return adjacency_; }
  const Segment& segment(std::uint32_t piece) const { return segments_[piece]; }
  int left_to_right_delta(std::uint32_t piece) const { return delta_[piece]; }
  std::optional<Side> exterior_side(std::uint32_t piece) const {
    if (exterior_[piece] < 0) return std::nullopt;
    return static_cast<Side>(exterior_[piece]);
  }

  /// One line per dual vertex: "id piece sub L|R slot0 slot1 slot2".
  std::string dump() const;

 private:
  friend BloatedDual build_bloated_dual(std::span<const Atom>, std::span<const IndexPair>);

  std::vector<Segment> segments_;
  std::vector<int> delta_;
  std::vector<std::int8_t> exterior_;
  std::vector<std::uint32_t> sub_offset_;
  std::vector<std::uint32_t> piece_of_sub_;
  std::vector<std::uint32_t> adjacency_;
};

/// Builds the bloated dual from atoms and their exact intersecting pairs.
/// Throws DegeneracyError on configurations that atomization should have
/// removed (a piece contained in another, coinciding directions).
BloatedDual build_bloated_dual(std::span<const Atom> atoms,
                               std::span<const IndexPair> intersections);

/// Partition of the dual vertices into face cycles.
struct FaceLabels {
  std::vector<std::uint32_t> face_of;
  /// Vertices of each cycle in walking order (CSR).
  std::vector<std::uint32_t> cycle_offsets{0};
  std::vector<std::uint32_t> cycle_vertices;
  /// Cycle on the outside of the box walls, if there are walls.
  std::optional<std::uint32_t> outer_face;

  std::size_t face_count() const { return cycle_offsets.size() - 1; }
  std::span<const std::uint32_t> cycle(std::uint32_t f) const {
    return {cycle_vertices.data() + cycle_offsets[f], cycle_vertices.data() + cycle_offsets[f + 1]};
  }
};

FaceLabels label_faces(const BloatedDual& dual);

struct FacePolygon {
  /// Boundary in walking order (counterclockwise for an outer boundary).
  std::vector<Point> vertices;
  /// The walked cycle runs clockwise: it bounds a hole of its face or the
  /// region outside the box.
  bool clockwise = false;
};

/// Materializes the boundary of the face cycle through `start` by intersecting
/// consecutive pieces. Throws std::out_of_range for an invalid vertex.
FacePolygon extract_face_polygon(const BloatedDual& dual, std::uint32_t start);

/// Everything needed to query the arrangement of one vertex.
struct VisibilityArrangement {
  std::vector<Atom> atoms;
  BloatedDual dual;
  FaceLabels faces;
};

VisibilityArrangement build_visibility_arrangement(const Drawing& d, VertexId v,
                                                   std::span<const VertexId> neighbors,
                                                   std::span<const EdgeId> obstacles,
                                                   const BoundingBox& box);

}  // namespace crossmin
