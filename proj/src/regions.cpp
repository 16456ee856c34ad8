#include "crossmin/regions.hpp"

#include "crossmin/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace crossmin {

namespace {

double signed_twice_area(std::span<const Point> poly) {
  double a = 0.0;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    a += p.x() * q.y() - p.y() * q.x();
  }
  return a;
}

bool blocks_ear(const Point& p, const Point& a, const Point& b, const Point& c) {
  if (p == a || p == b || p == c) return false;
  return orient(a, b, p) != Orientation::Right && orient(b, c, p) != Orientation::Right &&
         orient(c, a, p) != Orientation::Right;
}

}  // namespace

double triangle_area(const Triangle& t) {
  return 0.5 * std::abs((t[1] - t[0]).x() * (t[2] - t[0]).y() -
                        (t[1] - t[0]).y() * (t[2] - t[0]).x());
}

std::vector<Triangle> triangulate(std::span<const Point> polygon) {
  std::vector<Point> ring(polygon.begin(), polygon.end());
  if (signed_twice_area(ring) < 0.0) std::reverse(ring.begin(), ring.end());
  std::vector<Triangle> out;
  std::size_t i = 0;
  std::size_t stalled = 0;
  while (ring.size() >= 3) {
    const std::size_t n = ring.size();
    i %= n;
    const Point& a = ring[(i + n - 1) % n];
    const Point& b = ring[i];
    const Point& c = ring[(i + 1) % n];
    if (b == c || a == b) {
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      stalled = 0;
      continue;
    }
    const Orientation turn = orient(a, b, c);
    if (turn == Orientation::Collinear) {
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      stalled = 0;
      continue;
    }
    bool ear = turn == Orientation::Left;
    for (std::size_t k = 0; ear && k < n; ++k) {
      if (k == i || k == (i + 1) % n || k == (i + n - 1) % n) continue;
      if (blocks_ear(ring[k], a, b, c)) ear = false;
    }
    if (ear) {
      out.push_back({a, b, c});
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      stalled = 0;
      continue;
    }
    if (++stalled > n) {
      // No certifiable ear: fan the remainder.
      for (std::size_t k = 1; k + 1 < ring.size(); ++k) {
        if (orient(ring[0], ring[k], ring[k + 1]) == Orientation::Left) {
          out.push_back({ring[0], ring[k], ring[k + 1]});
        }
      }
      break;
    }
    ++i;
  }
  return out;
}

std::optional<Point> interior_point(std::span<const Point> polygon) {
  const std::vector<Triangle> tris = triangulate(polygon);
  const Triangle* best = nullptr;
  double best_area = 0.0;
  for (const Triangle& t : tris) {
    const double a = triangle_area(t);
    if (a > best_area) {
      best_area = a;
      best = &t;
    }
  }
  if (!best) return std::nullopt;
  return Point(((*best)[0] + (*best)[1] + (*best)[2]) / 3.0);
}

std::uint32_t choose_seed_face(const BloatedDual& dual, const FaceLabels& faces,
                               const BoundingBox& box, double min_area_fraction) {
  const double threshold = min_area_fraction * box.volume();
  std::optional<std::uint32_t> largest;
  double largest_area = -1.0;
  for (std::uint32_t f = 0; f < faces.face_count(); ++f) {
    if (faces.outer_face == f) continue;
    const FacePolygon poly = extract_face_polygon(dual, faces.cycle(f).front());
    if (poly.clockwise) continue;
    const double area = 0.5 * signed_twice_area(poly.vertices);
    if (area >= threshold) return f;
    if (area > largest_area) {
      largest_area = area;
      largest = f;
    }
  }
  if (!largest) throw std::invalid_argument("choose_seed_face: no bounded face");
  return *largest;
}

std::int64_t seed_count(const Drawing& d, VertexId v, std::span<const Point> polygon,
                        std::span<const VertexId> neighbors, std::span<const EdgeId> obstacles) {
  const std::optional<Point> probe = interior_point(polygon);
  if (!probe) throw std::invalid_argument("seed_count: polygon has no interior");
  return static_cast<std::int64_t>(count_spokes_at(d, v, neighbors, *probe, obstacles));
}

std::int64_t seed_count(const Drawing& d, VertexId v, std::span<const Point> polygon,
                        std::span<const EdgeId> obstacles) {
  return seed_count(d, v, polygon, d.graph().neighbors(v), obstacles);
}

FaceCounts propagate_counts(const BloatedDual& dual, const FaceLabels& faces,
                            std::uint32_t seed_face, std::int64_t seed) {
  if (seed_face >= faces.face_count() || faces.outer_face == seed_face) {
    throw std::invalid_argument("propagate_counts: invalid seed face");
  }
  if (seed < 0) throw InconsistentCountError("propagate_counts: negative seed count");
  FaceCounts out;
  out.count.assign(faces.face_count(), FaceCounts::kUncounted);
  out.seed_face = seed_face;
  out.count[seed_face] = seed;
  std::deque<std::uint32_t> queue{seed_face};
  while (!queue.empty()) {
    const std::uint32_t f = queue.front();
    queue.pop_front();
    for (std::uint32_t x : faces.cycle(f)) {
      const std::uint32_t y = dual.cross(x);
      const std::uint32_t g = faces.face_of[y];
      if (faces.outer_face == g || out.count[g] != FaceCounts::kUncounted) continue;
      const int delta = dual.left_to_right_delta(dual.piece_of(x));
      const std::int64_t c = out.count[f] + (BloatedDual::side(x) == Side::Left ? delta : -delta);
      if (c < 0) throw InconsistentCountError("propagate_counts: count became negative");
      out.count[g] = c;
      queue.push_back(g);
    }
  }
  out.min = std::numeric_limits<std::int64_t>::max();
  out.max = 0;
  for (std::int64_t c : out.count) {
    if (c == FaceCounts::kUncounted) continue;
    out.min = std::min(out.min, c);
    out.max = std::max(out.max, c);
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::int64_t>> min_faces(const FaceCounts& counts) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (std::uint32_t f = 0; f < counts.count.size(); ++f) {
    if (counts.counted(f) && counts.count[f] == counts.min) out.emplace_back(f, counts.min);
  }
  return out;
}

Point sample_point_in_triangles(std::span<const Triangle> triangles, std::mt19937_64& rng) {
  double total = 0.0;
  for (const Triangle& t : triangles) total += triangle_area(t);
  if (!(total > 0.0)) throw std::invalid_argument("sample_point_in_face: polygon has no area");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double pick = unit(rng) * total;
  const Triangle* chosen = &triangles.back();
  for (const Triangle& t : triangles) {
    pick -= triangle_area(t);
    if (pick < 0.0) {
      chosen = &t;
      break;
    }
  }
  double r1 = unit(rng);
  double r2 = unit(rng);
  if (r1 + r2 > 1.0) {
    r1 = 1.0 - r1;
    r2 = 1.0 - r2;
  }
  const Triangle& t = *chosen;
  return t[0] + r1 * (t[1] - t[0]) + r2 * (t[2] - t[0]);
}

Point sample_point_in_face(std::span<const Point> polygon, std::mt19937_64& rng) {
  const std::vector<Triangle> tris = triangulate(polygon);
  if (tris.empty()) throw std::invalid_argument("sample_point_in_face: polygon has no area");
  return sample_point_in_triangles(tris, rng);
}

std::vector<double> face_weights(const FaceCounts& counts) {
  std::vector<double> w(counts.count.size(), 0.0);
  double total = 0.0;
  for (std::size_t f = 0; f < w.size(); ++f) {
    if (counts.count[f] == FaceCounts::kUncounted) continue;
    const std::int64_t shift = counts.min - counts.count[f];
    w[f] = std::ldexp(1.0, static_cast<int>(std::max<std::int64_t>(shift, -1074)));
    total += w[f];
  }
  if (!(total > 0.0)) throw std::invalid_argument("face_weights: no counted face");
  for (double& x : w) x /= total;
  return w;
}

std::uint32_t weighted_face_sample(const FaceCounts& counts, std::mt19937_64& rng) {
  const std::vector<double> w = face_weights(counts);
  std::discrete_distribution<std::uint32_t> pick(w.begin(), w.end());
  return pick(rng);
}

}  // namespace crossmin
