#include "crossmin/graph.hpp"

#include "crossmin/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace crossmin {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const Edge& e : edges_) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("edge references a vertex id out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    ++degree[e.u];
    ++degree[e.v];
  }
  adjacency_offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    adjacency_offsets_[v + 1] = adjacency_offsets_[v] + degree[v];
  }
  neighbors_.resize(adjacency_offsets_.back());
  incident_.resize(adjacency_offsets_.back());
  std::vector<std::size_t> fill(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    neighbors_[fill[e.u]] = e.v;
    incident_[fill[e.u]++] = id;
    neighbors_[fill[e.v]] = e.u;
    incident_[fill[e.v]++] = id;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::vector<VertexId> sorted(neighbors_.begin() + adjacency_offsets_[v],
                                 neighbors_.begin() + adjacency_offsets_[v + 1]);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate edges are not allowed");
    }
  }
}

Drawing::Drawing(std::shared_ptr<const Graph> graph, Eigen::Matrix2Xd positions)
    : graph_(std::move(graph)), positions_(std::move(positions)) {
  if (!graph_) throw std::invalid_argument("drawing requires a graph");
  if (static_cast<std::size_t>(positions_.cols()) != graph_->vertex_count()) {
    throw std::invalid_argument("position count does not match vertex count");
  }
  if (!positions_.allFinite()) throw std::invalid_argument("positions must be finite");
}

BoundingBox Drawing::bounds() const {
  BoundingBox box;
  for (Eigen::Index i = 0; i < positions_.cols(); ++i) box.extend(positions_.col(i));
  return box;
}

PreprocessResult preprocess(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> component(n, -1);
  int best = -1;
  std::size_t best_size = 0;
  int count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    std::size_t size = 0;
    std::deque<VertexId> queue{s};
    component[s] = count;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      ++size;
      for (VertexId w : g.neighbors(v)) {
        if (component[w] < 0) {
          component[w] = count;
          queue.push_back(w);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best = count;
    }
    ++count;
  }

  std::vector<char> alive(n, 0);
  std::vector<std::size_t> degree(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (component[v] == best) {
      alive[v] = 1;
      degree[v] = g.degree(v);
    }
  }
  std::deque<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v] && degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const VertexId v = leaves.front();
    leaves.pop_front();
    if (!alive[v] || degree[v] != 1) continue;
    alive[v] = 0;
    for (VertexId w : g.neighbors(v)) {
      if (alive[w]) {
        --degree[w];
        if (degree[w] == 1) leaves.push_back(w);
      }
    }
  }
  // A peeled tree leaves one isolated vertex behind.
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v] && degree[v] == 0) alive[v] = 0;
  }

  PreprocessResult result;
  std::vector<VertexId> new_id(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) {
      new_id[v] = static_cast<VertexId>(result.original_id.size());
      result.original_id.push_back(v);
    }
  }
  if (result.original_id.empty()) {
    throw EmptyGraphError("preprocessing removed every vertex (the graph is a forest)");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (alive[e.u] && alive[e.v]) edges.push_back({new_id[e.u], new_id[e.v]});
  }
  result.graph = Graph(result.original_id.size(), std::move(edges));
  return result;
}

BoundingBox movement_square(const Drawing& d) {
  if (d.graph().vertex_count() == 0) {
    throw std::invalid_argument("movement_square requires at least one vertex");
  }
  const BoundingBox b = d.bounds();
  const Point center = b.center();
  const double side = b.sizes().maxCoeff();
  const double half = side > 0.0 ? side : 0.5;
  return BoundingBox(center - Point(half, half), center + Point(half, half));
}

PositionDefects find_position_defects(const Drawing& d) {
  const Graph& g = d.graph();
  PositionDefects out;
  std::vector<char> flagged(g.vertex_count(), 0);
  const auto flag = [&](VertexId v) {
    if (!flagged[v]) {
      flagged[v] = 1;
      out.offenders.push_back(v);
    }
  };

  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return lex_less(d.position(a), d.position(b));
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (d.position(order[i]) == d.position(order[i - 1])) {
      ++out.coincident_pairs;
      flag(order[i]);
    }
  }

  std::vector<Segment> segments;
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (d.position(ed.u) == d.position(ed.v)) continue;
    segments.push_back(d.segment(e));
    ids.push_back(e);
  }
  for (const auto& [i, j] : enumerate_intersections(segments)) {
    const Edge& a = g.edge(ids[i]);
    const Edge& b = g.edge(ids[j]);
    const Segment& sa = segments[i];
    const Segment& sb = segments[j];
    if (collinear_overlap(sa, sb)) {
      ++out.collinear_overlaps;
      for (VertexId w : {b.u, b.v}) {
        if (!a.incident_to(w) && on_segment(d.position(w), sa)) flag(w);
      }
      for (VertexId w : {a.u, a.v}) {
        if (!b.incident_to(w) && on_segment(d.position(w), sb)) flag(w);
      }
      continue;
    }
    if (a.adjacent_to(b)) continue;
    if (segments_intersect(sa, sb, IntersectionMode::Proper)) continue;
    ++out.vertex_on_edge;
    for (VertexId w : {b.u, b.v}) {
      if (on_segment(d.position(w), sa)) flag(w);
    }
    for (VertexId w : {a.u, a.v}) {
      if (on_segment(d.position(w), sb)) flag(w);
    }
  }
  std::sort(out.offenders.begin(), out.offenders.end());
  return out;
}

int enforce_general_position(Drawing& d, std::mt19937_64& rng, int max_rounds) {
  for (int round = 0; round <= max_rounds; ++round) {
    const PositionDefects defects = find_position_defects(d);
    if (defects.empty()) return round;
    if (round == max_rounds) break;
    const double diag = d.graph().vertex_count() > 0 ? d.bounds().diagonal().norm() : 0.0;
    const double radius = 1e-9 * (diag > 0.0 ? diag : 1.0) / std::sqrt(2.0);
    std::uniform_real_distribution<double> offset(-radius, radius);
    for (VertexId v : defects.offenders) {
      d.set_position(v, d.position(v) + Point(offset(rng), offset(rng)));
    }
  }
  throw DegeneracyError("could not restore general position by jittering");
}

}  // namespace crossmin
