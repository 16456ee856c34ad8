#include "crossmin/crossings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace crossmin {

std::vector<std::pair<std::uint32_t, std::uint32_t>> enumerate_intersections(
    std::span<const Segment> segments) {
  const std::size_t n = segments.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const double xa = segments[a].source().x(), xb = segments[b].source().x();
    return xa < xb || (xa == xb && a < b);
  });
  std::vector<double> x_lo(n), x_hi(n), y_lo(n), y_hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Segment& s = segments[order[k]];
    x_lo[k] = s.source().x();
    x_hi[k] = s.target().x();
    y_lo[k] = std::min(s.source().y(), s.target().y());
    y_hi[k] = std::max(s.source().y(), s.target().y());
  }

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> per_thread(
      static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t ki = 0; ki < static_cast<std::ptrdiff_t>(n); ++ki) {
      const auto i = static_cast<std::size_t>(ki);
      // Active set of i: later segments whose x-interval starts before i ends.
      for (std::size_t j = i + 1; j < n && x_lo[j] <= x_hi[i]; ++j) {
        if (y_hi[j] < y_lo[i] || y_hi[i] < y_lo[j]) continue;
        if (segments_intersect(segments[order[i]], segments[order[j]],
                               IntersectionMode::Closed)) {
          local.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
        }
      }
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (auto& v : per_thread) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool CrossingTally::consistent() const {
  const std::uint64_t sum = std::accumulate(per_vertex.begin(), per_vertex.end(), std::uint64_t{0});
  return sum == 4 * total;
}

int cross_pair(const Drawing& d, EdgeId e, EdgeId f) {
  if (e == f) throw std::invalid_argument("cross_pair: an edge does not cross itself");
  const Edge& a = d.graph().edge(e);
  const Edge& b = d.graph().edge(f);
  if (a.adjacent_to(b)) return 0;
  return segments_intersect(d.segment(e), d.segment(f), IntersectionMode::Proper) ? 1 : 0;
}

CrossingTally count_all(const Drawing& d) {
  const Graph& g = d.graph();
  std::vector<Segment> segments;
  segments.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) segments.push_back(d.segment(e));
  CrossingTally tally;
  tally.per_vertex.assign(g.vertex_count(), 0);
  for (const auto& [i, j] : enumerate_intersections(segments)) {
    const Edge& a = g.edge(i);
    const Edge& b = g.edge(j);
    if (a.adjacent_to(b)) continue;
    if (!segments_intersect(segments[i], segments[j], IntersectionMode::Proper)) continue;
    ++tally.total;
    ++tally.per_vertex[a.u];
    ++tally.per_vertex[a.v];
    ++tally.per_vertex[b.u];
    ++tally.per_vertex[b.v];
  }
  return tally;
}

namespace {

// Crossings of segment (u, p) against `edges`, skipping edges incident to u or v.
std::uint64_t crossings_of_spoke(const Drawing& d, VertexId v, VertexId u, const Point& p,
                                 std::span<const EdgeId> edges) {
  const Point pu = d.position(u);
  if (pu == p) return 0;
  const Segment spoke(pu, p);
  std::uint64_t count = 0;
  for (EdgeId e : edges) {
    const Edge& ed = d.graph().edge(e);
    if (ed.incident_to(u) || ed.incident_to(v)) continue;
    if (segments_intersect(spoke, d.segment(e), IntersectionMode::Proper)) ++count;
  }
  return count;
}

std::vector<EdgeId> all_edges(const Graph& g) {
  std::vector<EdgeId> ids(g.edge_count());
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  return ids;
}

}  // namespace

std::uint64_t count_vertex_at(const Drawing& d, VertexId v, const Point& p,
                              std::span<const EdgeId> edges) {
  std::uint64_t total = 0;
  for (VertexId u : d.graph().neighbors(v)) total += crossings_of_spoke(d, v, u, p, edges);
  return total;
}

std::uint64_t count_spokes_at(const Drawing& d, VertexId v, std::span<const VertexId> neighbors,
                              const Point& p, std::span<const EdgeId> edges) {
  std::uint64_t total = 0;
  for (VertexId u : neighbors) total += crossings_of_spoke(d, v, u, p, edges);
  return total;
}

std::uint64_t count_vertex_at(const Drawing& d, VertexId v, const Point& p) {
  const std::vector<EdgeId> ids = all_edges(d.graph());
  return count_vertex_at(d, v, p, ids);
}

std::uint64_t co_crossing_at(const Drawing& d, VertexId v, const Point& p) {
  const Graph& g = d.graph();
  const std::uint64_t m = g.edge_count();
  const std::uint64_t k = g.degree(v);
  if (m == 0) return 0;
  return k * (m - 1) - count_vertex_at(d, v, p);
}

std::uint64_t co_crossing(const Drawing& d, VertexId v) {
  return co_crossing_at(d, v, d.position(v));
}

double estimate_co_crossing(const Drawing& d, VertexId v, const Point& p,
                            std::span<const EdgeId> sample) {
  if (sample.empty()) throw std::invalid_argument("estimate_co_crossing: empty sample");
  const Graph& g = d.graph();
  double sum = 0.0;
  const auto neighbors = g.neighbors(v);
  const auto incident = g.incident_edges(v);
  for (std::size_t k = 0; k < neighbors.size(); ++k) {
    const VertexId u = neighbors[k];
    const EdgeId uv = incident[k];
    const Point pu = d.position(u);
    std::size_t not_crossed = 0;
    for (EdgeId e : sample) {
      if (e == uv) continue;
      const Edge& ed = g.edge(e);
      const bool crosses = pu != p && !ed.incident_to(u) && !ed.incident_to(v) &&
                           segments_intersect(Segment(pu, p), d.segment(e),
                                              IntersectionMode::Proper);
      if (!crosses) ++not_crossed;
    }
    sum += static_cast<double>(not_crossed) / static_cast<double>(sample.size());
  }
  return static_cast<double>(g.edge_count()) * sum;
}

std::vector<EdgeId> sample_without_replacement(std::span<const EdgeId> pool, std::size_t k,
                                               std::mt19937_64& rng) {
  std::vector<EdgeId> items(pool.begin(), pool.end());
  const std::size_t take = std::min(k, items.size());
  for (std::size_t i = 0; i < take; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, items.size() - 1);
    std::swap(items[i], items[pick(rng)]);
  }
  items.resize(take);
  return items;
}

}  // namespace crossmin
