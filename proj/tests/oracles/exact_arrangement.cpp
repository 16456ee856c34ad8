#include "exact_arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

struct HalfEdge {
  std::uint32_t from, to;
  SideKey key;
  std::uint32_t twin;
};

}  // namespace

ExactArrangement build_exact_arrangement(
    const std::vector<std::pair<QPoint, QPoint>>& segments) {
  const std::size_t n = segments.size();
  std::vector<std::vector<mpq_class>> params(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [a, b] = segments[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& [c, d] = segments[j];
      if (!closed_intersect(a, b, c, d)) continue;
      const bool parallel = sign(mpq_class((b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x))) == 0;
      if (parallel) {
        // Collinear segments may only touch at a shared endpoint.
        const int shared = (a == c) + (a == d) + (b == c) + (b == d);
        if (shared != 1) throw std::invalid_argument("oracle: collinear overlap in input");
        continue;  // the touching point is an endpoint of i
      }
      const mpq_class t = line_param(a, b, c, d);
      if (t > 0 && t < 1) params[i].push_back(t);
    }
    std::sort(params[i].begin(), params[i].end());
    params[i].erase(std::unique(params[i].begin(), params[i].end()), params[i].end());
  }

  ExactArrangement out;
  std::map<QPoint, std::uint32_t> vertex_id;
  const auto vid = [&](const QPoint& p) {
    auto [it, fresh] = vertex_id.emplace(p, static_cast<std::uint32_t>(vertex_id.size()));
    return it->second;
  };
  std::vector<QPoint> where;
  std::vector<HalfEdge> half;
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& [a, b] = segments[i];
    std::vector<QPoint> pts{a};
    for (const mpq_class& t : params[i]) pts.push_back(at_param(a, b, t));
    pts.push_back(b);
    out.sub_count.push_back(static_cast<std::uint32_t>(pts.size() - 1));
    for (std::uint32_t k = 0; k + 1 < pts.size(); ++k) {
      const std::uint32_t u = vid(pts[k]), v = vid(pts[k + 1]);
      const auto h = static_cast<std::uint32_t>(half.size());
      half.push_back({u, v, {i, k, true}, h + 1});
      half.push_back({v, u, {i, k, false}, h});
    }
  }
  where.resize(vertex_id.size());
  for (const auto& [p, id] : vertex_id) where[id] = p;
  out.vertices = vertex_id.size();
  out.edges = half.size() / 2;

  // Outgoing half-edges around each vertex in counterclockwise order.
  std::vector<std::vector<std::uint32_t>> around(out.vertices);
  for (std::uint32_t h = 0; h < half.size(); ++h) around[half[h].from].push_back(h);
  std::vector<std::uint32_t> position(half.size());
  for (auto& list : around) {
    std::sort(list.begin(), list.end(), [&](std::uint32_t g, std::uint32_t h) {
      const QPoint& o = where[half[g].from];
      const QPoint& p = where[half[g].to];
      const QPoint& q = where[half[h].to];
      return compare_angle(mpq_class(p.x - o.x), mpq_class(p.y - o.y), mpq_class(q.x - o.x),
                           mpq_class(q.y - o.y)) < 0;
    });
    for (std::uint32_t k = 0; k < list.size(); ++k) position[list[k]] = k;
  }
  // The face left of h continues along the edge just clockwise of twin(h).
  std::vector<std::uint32_t> next(half.size());
  for (std::uint32_t h = 0; h < half.size(); ++h) {
    const std::uint32_t t = half[h].twin;
    const auto& list = around[half[t].from];
    next[h] = list[(position[t] + list.size() - 1) % list.size()];
  }

  std::vector<std::uint32_t> cycle_of(half.size(), UINT32_MAX);
  for (std::uint32_t h = 0; h < half.size(); ++h) {
    if (cycle_of[h] != UINT32_MAX) continue;
    const auto c = static_cast<std::uint32_t>(out.cycles.size());
    out.cycles.emplace_back();
    for (std::uint32_t g = h; cycle_of[g] == UINT32_MAX; g = next[g]) {
      cycle_of[g] = c;
      out.cycles.back().push_back(half[g].key);
    }
    std::sort(out.cycles.back().begin(), out.cycles.back().end());
  }
  for (std::uint32_t h = 0; h < half.size(); ++h) {
    out.adjacency.emplace_back(cycle_of[h], cycle_of[half[h].twin]);
  }

  std::vector<std::uint32_t> parent(out.vertices);
  std::iota(parent.begin(), parent.end(), 0u);
  const auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const HalfEdge& h : half) parent[find(h.from)] = find(h.to);
  for (std::uint32_t v = 0; v < out.vertices; ++v) {
    if (find(v) == v) ++out.components;
  }
  return out;
}

}  // namespace oracle
