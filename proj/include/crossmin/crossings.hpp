#pragma once

#include "crossmin/graph.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace crossmin {

/// Index pairs (i < j) of segments whose closed sets intersect, sorted.
/// Segments are swept by x-interval; pairs whose intervals overlap are tested
/// directly, so no intersection coordinate is ever formed.
std::vector<std::pair<std::uint32_t, std::uint32_t>> enumerate_intersections(
    std::span<const Segment> segments);

struct CrossingTally {
  std::uint64_t total = 0;
  /// Crossings on edges incident to each vertex.
  std::vector<std::uint64_t> per_vertex;

  /// Sum of per-vertex counts equals four times the total.
  bool consistent() const;
};

/// 1 iff the edges share no endpoint and cross in their relative interiors.
/// Throws std::invalid_argument for e == f.
int cross_pair(const Drawing& d, EdgeId e, EdgeId f);

CrossingTally count_all(const Drawing& d);

/// Crossings between the edges incident to v, with v placed at p, and the
/// listed edges. The drawing is not modified.
std::uint64_t count_vertex_at(const Drawing& d, VertexId v, const Point& p,
                              std::span<const EdgeId> edges);

/// Crossings of the spokes from p to the listed neighbors of v against
/// `edges`, skipping edges incident to v or to the spoke's neighbor.
std::uint64_t count_spokes_at(const Drawing& d, VertexId v, std::span<const VertexId> neighbors,
                              const Point& p, std::span<const EdgeId> edges);

/// count_vertex_at against every edge of the graph.
std::uint64_t count_vertex_at(const Drawing& d, VertexId v, const Point& p);

/// Number of pairs (uv, e), uv incident to v and e != uv, that do not cross.
std::uint64_t co_crossing(const Drawing& d, VertexId v);

/// co_crossing with v placed at p.
std::uint64_t co_crossing_at(const Drawing& d, VertexId v, const Point& p);

/// Estimate |E| * sum_u |coCrEdge(uv, p) ∩ S| / |S| of the co-crossing number
/// at p from one edge sample S shared by all neighbors. Throws
/// std::invalid_argument if the sample is empty.
double estimate_co_crossing(const Drawing& d, VertexId v, const Point& p,
                            std::span<const EdgeId> sample);

/// Uniform sample of min(k, |pool|) distinct entries of `pool`.
std::vector<EdgeId> sample_without_replacement(std::span<const EdgeId> pool, std::size_t k,
                                               std::mt19937_64& rng);

}  // namespace crossmin
