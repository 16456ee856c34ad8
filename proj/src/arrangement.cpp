#include "crossmin/arrangement.hpp"

#include "crossmin/crossings.hpp"
#include "crossmin/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace crossmin {

int Atom::left_to_right_delta() const {
  int delta = 0;
  for (const Annotation& a : annotations) {
    if (a.shadow == ShadowSide::Right) ++delta;
    if (a.shadow == ShadowSide::Left) --delta;
  }
  return delta;
}

std::optional<Side> side_of(const Segment& s, const Point& p) {
  switch (orient(s.source(), s.target(), p)) {
    case Orientation::Left: return Side::Left;
    case Orientation::Right: return Side::Right;
    case Orientation::Collinear: break;
  }
  return std::nullopt;
}

std::optional<Segment> clip_segment_to_box(const Segment& s, const BoundingBox& box) {
  const bool src_in = box.contains(s.source());
  const bool tgt_in = box.contains(s.target());
  if (src_in && tgt_in) return s;
  // Liang-Barsky on t in [0, 1], keeping whichever endpoint is already inside.
  const Vector d = s.direction();
  double t0 = 0.0, t1 = 1.0;
  for (int k = 0; k < 2; ++k) {
    const double o = s.source()[k];
    const double lo = box.min()[k], hi = box.max()[k];
    if (d[k] == 0.0) {
      if (o < lo || o > hi) return std::nullopt;
      continue;
    }
    double a = (lo - o) / d[k];
    double b = (hi - o) / d[k];
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
  }
  if (!(t0 < t1)) return std::nullopt;
  const auto at = [&](double t) {
    Point p = s.source() + t * d;
    for (int k = 0; k < 2; ++k) p[k] = std::clamp(p[k], box.min()[k], box.max()[k]);
    return p;
  };
  const Point a = src_in ? s.source() : at(t0);
  const Point b = tgt_in ? s.target() : at(t1);
  if (a == b) return std::nullopt;
  return Segment(a, b);
}

namespace {

ShadowSide to_shadow(std::optional<Side> s) {
  if (!s) return ShadowSide::None;
  return *s == Side::Left ? ShadowSide::Left : ShadowSide::Right;
}

Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

}  // namespace

std::vector<TaggedPiece> shadow_boundary(const Point& u, const Segment& e, const BoundingBox& box,
                                         VertexId neighbor, EdgeId obstacle) {
  if (on_segment(u, e)) throw DegeneracyError("shadow_boundary: u lies on e");
  const std::optional<Side> u_side = side_of(e, u);
  std::vector<TaggedPiece> out;
  if (!u_side) return out;

  if (auto clipped = clip_segment_to_box(e, box)) {
    out.push_back({*clipped, {neighbor, obstacle, PieceKind::ObstacleSegment},
                   to_shadow(opposite(*u_side)), std::nullopt});
  }
  const auto add_ray = [&](const Point& from, const Point& other, PieceKind kind) {
    auto ray = clip_to_box(from, from - u, box);
    if (!ray) return;
    out.push_back({*ray, {neighbor, obstacle, kind}, to_shadow(side_of(*ray, other)),
                   std::nullopt});
  };
  add_ray(e.source(), e.target(), PieceKind::RayFromSource);
  add_ray(e.target(), e.source(), PieceKind::RayFromTarget);
  return out;
}

std::vector<TaggedPiece> box_walls(const BoundingBox& box) {
  const Point lo = box.min();
  const Point hi = box.max();
  const Point lr(hi.x(), lo.y());
  const Point ul(lo.x(), hi.y());
  const Point center = box.center();
  std::vector<TaggedPiece> out;
  for (const auto& [a, b] : {std::pair{lo, lr}, std::pair{lr, hi}, std::pair{ul, hi},
                             std::pair{lo, ul}}) {
    const Segment s(a, b);
    const auto inside = side_of(s, center);
    out.push_back({s, {kNoId, kNoId, PieceKind::BoxWall}, ShadowSide::None,
                   opposite(inside.value())});
  }
  return out;
}

std::vector<TaggedPiece> collect_pieces(const Drawing& d, VertexId v,
                                        std::span<const VertexId> neighbors,
                                        std::span<const EdgeId> obstacles,
                                        const BoundingBox& box) {
  const Graph& g = d.graph();
  std::vector<TaggedPiece> out;
  for (VertexId u : neighbors) {
    const Point pu = d.position(u);
    for (EdgeId e : obstacles) {
      const Edge& ed = g.edge(e);
      if (ed.incident_to(u) || ed.incident_to(v)) continue;
      auto pieces = shadow_boundary(pu, d.segment(e), box, u, e);
      out.insert(out.end(), pieces.begin(), pieces.end());
    }
  }
  auto walls = box_walls(box);
  out.insert(out.end(), walls.begin(), walls.end());
  return out;
}

std::vector<TaggedPiece> collect_pieces(const Drawing& d, VertexId v,
                                        std::span<const EdgeId> obstacles,
                                        const BoundingBox& box) {
  return collect_pieces(d, v, d.graph().neighbors(v), obstacles, box);
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::uint32_t{0});
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool segment_less(const Segment& a, const Segment& b) {
  if (a.source() != b.source()) return lex_less(a.source(), b.source());
  return lex_less(a.target(), b.target());
}

std::vector<Segment> geometries(std::span<const Atom> atoms) {
  std::vector<Segment> out;
  out.reserve(atoms.size());
  for (const Atom& a : atoms) out.push_back(a.geometry);
  return out;
}

// Splits a set of collinear, transitively overlapping atoms at all endpoints.
void split_collinear_group(std::span<const Atom> atoms, std::span<const std::uint32_t> members,
                           std::vector<Atom>& out) {
  std::vector<Point> cuts;
  for (std::uint32_t m : members) {
    cuts.push_back(atoms[m].geometry.source());
    cuts.push_back(atoms[m].geometry.target());
  }
  std::sort(cuts.begin(), cuts.end(), lex_less);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Point& a = cuts[k];
    const Point& b = cuts[k + 1];
    Atom atom{Segment(a, b), {}, std::nullopt};
    for (std::uint32_t m : members) {
      const Segment& s = atoms[m].geometry;
      if (lex_less(a, s.source()) || lex_less(s.target(), b)) continue;
      atom.annotations.insert(atom.annotations.end(), atoms[m].annotations.begin(),
                              atoms[m].annotations.end());
      if (atoms[m].exterior) atom.exterior = atoms[m].exterior;
    }
    if (!atom.annotations.empty()) out.push_back(std::move(atom));
  }
}

}  // namespace

AtomizedPieces atomize_and_intersect(std::span<const TaggedPiece> pieces) {
  std::vector<std::uint32_t> order(pieces.size());
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (pieces[a].geometry == pieces[b].geometry) return a < b;
    return segment_less(pieces[a].geometry, pieces[b].geometry);
  });
  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const TaggedPiece& p = pieces[order[k]];
    if (k == 0 || !(pieces[order[k - 1]].geometry == p.geometry)) {
      atoms.push_back({p.geometry, {}, std::nullopt});
    }
    atoms.back().annotations.push_back({p.tag, p.shadow});
    if (p.exterior) atoms.back().exterior = p.exterior;
  }

  std::vector<IndexPair> pairs = enumerate_intersections(geometries(atoms));
  UnionFind uf(atoms.size());
  bool overlaps = false;
  for (const auto& [i, j] : pairs) {
    if (collinear_overlap(atoms[i].geometry, atoms[j].geometry)) {
      uf.unite(i, j);
      overlaps = true;
    }
  }
  if (!overlaps) return {std::move(atoms), std::move(pairs)};

  std::vector<std::vector<std::uint32_t>> groups(atoms.size());
  for (std::uint32_t i = 0; i < atoms.size(); ++i) groups[uf.find(i)].push_back(i);
  std::vector<Atom> split;
  for (std::uint32_t i = 0; i < atoms.size(); ++i) {
    const std::uint32_t root = uf.find(i);
    if (groups[root].size() == 1) {
      split.push_back(std::move(atoms[i]));
    } else if (root == i) {
      split_collinear_group(atoms, groups[root], split);
    }
  }
  pairs = enumerate_intersections(geometries(split));
  return {std::move(split), std::move(pairs)};
}

std::vector<Atom> atomize_overlaps(std::span<const TaggedPiece> pieces) {
  return atomize_and_intersect(pieces).atoms;
}

std::vector<Atom> plain_atoms(std::span<const Segment> segments) {
  std::vector<Atom> out;
  out.reserve(segments.size());
  for (std::uint32_t i = 0; i < segments.size(); ++i) {
    out.push_back({segments[i], {{{kNoId, i, PieceKind::ObstacleSegment}, ShadowSide::None}},
                   std::nullopt});
  }
  return out;
}

namespace {

// Where a partner piece meets a piece: 0 is the source, 1..l the interior
// event groups in order, l + 1 the target.
struct PieceEvents {
  std::vector<std::uint32_t> location;  // aligned with the neighbor list
  std::uint32_t groups = 0;
};

struct EndRef {
  std::uint32_t piece;
  std::uint32_t sub;
  bool forward;
};

}  // namespace

BloatedDual build_bloated_dual(std::span<const Atom> atoms,
                               std::span<const IndexPair> intersections) {
  const std::size_t n = atoms.size();
  BloatedDual dual;
  dual.segments_ = geometries(atoms);
  dual.delta_.resize(n);
  dual.exterior_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    dual.delta_[i] = atoms[i].left_to_right_delta();
    dual.exterior_[i] = atoms[i].exterior ? static_cast<std::int8_t>(*atoms[i].exterior) : -1;
  }
  const std::vector<Segment>& seg = dual.segments_;

  std::vector<std::uint32_t> nbr_offset(n + 1, 0);
  for (const auto& [i, j] : intersections) {
    ++nbr_offset[i + 1];
    ++nbr_offset[j + 1];
  }
  std::partial_sum(nbr_offset.begin(), nbr_offset.end(), nbr_offset.begin());
  std::vector<std::uint32_t> nbr(nbr_offset.back());
  {
    std::vector<std::uint32_t> fill(nbr_offset.begin(), nbr_offset.end() - 1);
    for (const auto& [i, j] : intersections) {
      nbr[fill[i]++] = j;
      nbr[fill[j]++] = i;
    }
  }
  std::vector<PieceEvents> events(n);
  ExceptionRelay relay;

  // Phase 1: order the events along every piece.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t pi = 0; pi < static_cast<std::ptrdiff_t>(n); ++pi) relay.run([&] {
    const auto p = static_cast<std::uint32_t>(pi);
    const std::uint32_t lo = nbr_offset[p], hi = nbr_offset[p + 1];
    std::sort(nbr.begin() + lo, nbr.begin() + hi);
    const Segment& s = seg[p];
    PieceEvents& ev = events[p];
    ev.location.assign(hi - lo, 0);
    constexpr std::uint32_t kInterior = 0xfffffffeu;
    std::vector<std::uint32_t> interior;
    for (std::uint32_t k = lo; k < hi; ++k) {
      const Segment& t = seg[nbr[k]];
      const bool at_src = on_segment(s.source(), t);
      const bool at_tgt = on_segment(s.target(), t);
      if (at_src && at_tgt) throw DegeneracyError("build_bloated_dual: piece contained in another");
      if (at_src) {
        ev.location[k - lo] = 0;
      } else if (at_tgt) {
        ev.location[k - lo] = kInterior + 1;  // patched once the group count is known
      } else {
        ev.location[k - lo] = kInterior;
        interior.push_back(k);
      }
    }
    std::sort(interior.begin(), interior.end(), [&](std::uint32_t a, std::uint32_t b) {
      const AlongOrder o = intersection_order_along_unchecked(s, seg[nbr[a]], seg[nbr[b]]);
      if (o != AlongOrder::Equal) return o == AlongOrder::ABeforeB;
      return nbr[a] < nbr[b];
    });
    std::uint32_t group = 0;
    for (std::size_t k = 0; k < interior.size(); ++k) {
      if (k == 0 || intersection_order_along_unchecked(s, seg[nbr[interior[k - 1]]],
                                                       seg[nbr[interior[k]]]) != AlongOrder::Equal) {
        ++group;
      }
      ev.location[interior[k] - lo] = group;
    }
    ev.groups = group;
    for (auto& loc : ev.location) {
      if (loc == kInterior + 1) loc = group + 1;
    }
  });
  relay.rethrow();

  dual.sub_offset_.assign(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    dual.sub_offset_[p + 1] = dual.sub_offset_[p] + events[p].groups + 1;
  }
  const std::uint32_t subs = dual.sub_offset_.back();
  dual.piece_of_sub_.resize(subs);
  for (std::uint32_t p = 0; p < n; ++p) {
    std::fill(dual.piece_of_sub_.begin() + dual.sub_offset_[p],
              dual.piece_of_sub_.begin() + dual.sub_offset_[p + 1], p);
  }
  dual.adjacency_.assign(std::size_t{6} * subs, BloatedDual::kAbsent);

  const auto location_on = [&](std::uint32_t t, std::uint32_t p) {
    const auto first = nbr.begin() + nbr_offset[t];
    const auto last = nbr.begin() + nbr_offset[t + 1];
    const auto it = std::lower_bound(first, last, p);
    return events[t].location[static_cast<std::size_t>(it - first)];
  };

  // Phase 2: link angularly consecutive piece sides around every event point.
#pragma omp parallel
  {
    std::vector<EndRef> refs;
    std::vector<SegmentEnd> ends;
    std::vector<std::uint32_t> by_location;
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t pi = 0; pi < static_cast<std::ptrdiff_t>(n); ++pi) relay.run([&] {
      const auto p = static_cast<std::uint32_t>(pi);
      const std::uint32_t lo = nbr_offset[p], hi = nbr_offset[p + 1];
      const PieceEvents& ev = events[p];
      const std::uint32_t l = ev.groups;
      for (std::uint32_t j = 0; j <= l; ++j) {
        const std::uint32_t r = dual.vertex(p, j, Side::Right);
        const std::uint32_t lft = dual.vertex(p, j, Side::Left);
        dual.adjacency_[3 * r] = lft;
        dual.adjacency_[3 * lft] = r;
      }
      by_location.resize(hi - lo);
      std::iota(by_location.begin(), by_location.end(), 0u);
      std::stable_sort(by_location.begin(), by_location.end(), [&](std::uint32_t a, std::uint32_t b) {
        return ev.location[a] < ev.location[b];
      });
      std::size_t cursor = 0;
      for (std::uint32_t event = 0; event <= l + 1; ++event) {
        refs.clear();
        ends.clear();
        if (event > 0) refs.push_back({p, event - 1, false});
        if (event <= l) refs.push_back({p, event, true});
        for (; cursor < by_location.size() && ev.location[by_location[cursor]] == event; ++cursor) {
          const std::uint32_t t = nbr[lo + by_location[cursor]];
          const std::uint32_t c = location_on(t, p);
          if (c > 0) refs.push_back({t, c - 1, false});
          if (c <= events[t].groups) refs.push_back({t, c, true});
        }
        for (const EndRef& ref : refs) ends.push_back({seg[ref.piece], ref.forward});
        const std::vector<std::size_t> order = angular_order_around(ends);
        const std::size_t count = order.size();
        for (std::size_t i = 0; i < count; ++i) {
          const EndRef& own = refs[order[i]];
          if (own.piece != p) continue;
          const EndRef& next = refs[order[(i + 1) % count]];
          const EndRef& prev = refs[order[(i + count - 1) % count]];
          const int slot = own.forward ? 1 : 2;
          // The side left of the outgoing ray faces the next end counterclockwise.
          const std::uint32_t ccw_side =
              dual.vertex(p, own.sub, own.forward ? Side::Left : Side::Right);
          const std::uint32_t cw_side =
              dual.vertex(p, own.sub, own.forward ? Side::Right : Side::Left);
          dual.adjacency_[3 * ccw_side + slot] =
              dual.vertex(next.piece, next.sub, next.forward ? Side::Right : Side::Left);
          dual.adjacency_[3 * cw_side + slot] =
              dual.vertex(prev.piece, prev.sub, prev.forward ? Side::Left : Side::Right);
        }
      }
    });
  }
  relay.rethrow();
  return dual;
}

std::string BloatedDual::dump() const {
  std::ostringstream out;
  for (std::uint32_t x = 0; x < vertex_count(); ++x) {
    out << x << ' ' << piece_of(x) << ' ' << sub_of(x) << ' '
        << (side(x) == Side::Left ? 'L' : 'R');
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t y = slot(x, k);
      out << ' ';
      if (y == kAbsent) {
        out << '-';
      } else {
        out << y;
      }
    }
    out << '\n';
  }
  return out.str();
}

FaceLabels label_faces(const BloatedDual& dual) {
  const std::size_t n = dual.vertex_count();
  FaceLabels labels;
  labels.face_of.assign(n, BloatedDual::kAbsent);
  labels.cycle_vertices.reserve(n);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (labels.face_of[start] != BloatedDual::kAbsent) continue;
    const auto face = static_cast<std::uint32_t>(labels.face_count());
    std::uint32_t x = start;
    do {
      if (x == BloatedDual::kAbsent || labels.face_of[x] != BloatedDual::kAbsent) {
        throw std::logic_error("label_faces: face successors do not form cycles");
      }
      labels.face_of[x] = face;
      labels.cycle_vertices.push_back(x);
      x = dual.face_successor(x);
    } while (x != start);
    labels.cycle_offsets.push_back(static_cast<std::uint32_t>(labels.cycle_vertices.size()));
  }
  for (std::uint32_t p = 0; p < dual.piece_count(); ++p) {
    if (auto side = dual.exterior_side(p)) {
      labels.outer_face = labels.face_of[dual.vertex(p, 0, *side)];
      break;
    }
  }
  return labels;
}

FacePolygon extract_face_polygon(const BloatedDual& dual, std::uint32_t start) {
  if (start >= dual.vertex_count()) throw std::out_of_range("extract_face_polygon: bad vertex");
  FacePolygon poly;
  double twice_area = 0.0;
  std::uint32_t x = start;
  do {
    const std::uint32_t y = dual.face_successor(x);
    if (y == BloatedDual::kAbsent) throw std::logic_error("extract_face_polygon: open cycle");
    const std::uint32_t s = dual.piece_of(x);
    const std::uint32_t t = dual.piece_of(y);
    const std::uint32_t jx = dual.sub_of(x);
    const std::uint32_t jy = dual.sub_of(y);
    const Segment& sx = dual.segment(s);
    const Segment& sy = dual.segment(t);
    Point corner;
    if (s == t && jx != jy) {
      // Straight through an event touched from the other side.
      x = y;
      continue;
    }
    if (BloatedDual::side(x) == Side::Left && jx + 1 == dual.sub_piece_count(s)) {
      corner = sx.target();
    } else if (BloatedDual::side(x) == Side::Right && jx == 0) {
      corner = sx.source();
    } else if (BloatedDual::side(y) == Side::Left && jy == 0) {
      corner = sy.source();
    } else if (BloatedDual::side(y) == Side::Right && jy + 1 == dual.sub_piece_count(t)) {
      corner = sy.target();
    } else {
      corner = line_intersection(sx, sy);
    }
    poly.vertices.push_back(corner);
    x = y;
  } while (x != start);
  const std::size_t k = poly.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = poly.vertices[i];
    const Point& b = poly.vertices[(i + 1) % k];
    twice_area += a.x() * b.y() - a.y() * b.x();
  }
  poly.clockwise = twice_area < 0.0;
  return poly;
}

VisibilityArrangement build_visibility_arrangement(const Drawing& d, VertexId v,
                                                   std::span<const VertexId> neighbors,
                                                   std::span<const EdgeId> obstacles,
                                                   const BoundingBox& box) {
  const std::vector<TaggedPiece> pieces = collect_pieces(d, v, neighbors, obstacles, box);
  AtomizedPieces atomized = atomize_and_intersect(pieces);
  BloatedDual dual = build_bloated_dual(atomized.atoms, atomized.intersections);
  FaceLabels faces = label_faces(dual);
  return {std::move(atomized.atoms), std::move(dual), std::move(faces)};
}

}  // namespace crossmin
