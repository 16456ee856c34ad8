#pragma once

#include "crossmin/geometry.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace crossmin {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool incident_to(VertexId w) const { return u == w || v == w; }
  bool adjacent_to(const Edge& o) const { return incident_to(o.u) || incident_to(o.v); }
  VertexId other(VertexId w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicates or ids >= n.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return adjacency_offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + adjacency_offsets_[v],
            neighbors_.data() + adjacency_offsets_[v + 1]};
  }
  /// Edge ids incident to v, aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {incident_.data() + adjacency_offsets_[v],
            incident_.data() + adjacency_offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return adjacency_offsets_[v + 1] - adjacency_offsets_[v];
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> adjacency_offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<EdgeId> incident_;
};

/// Vertex positions of a graph. Positions are stored column-wise.
class Drawing {
 public:
  Drawing() = default;
  /// Throws std::invalid_argument on a size mismatch or non-finite coordinates.
  Drawing(std::shared_ptr<const Graph> graph, Eigen::Matrix2Xd positions);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const Eigen::Matrix2Xd& positions() const { return positions_; }

  Point position(VertexId v) const { return positions_.col(v); }
  void set_position(VertexId v, const Point& p) { positions_.col(v) = p; }

  Segment segment(EdgeId e) const {
    const Edge& ed = graph_->edge(e);
    return Segment(position(ed.u), position(ed.v));
  }

  /// Axis-aligned bounding box of all vertex positions (may be degenerate).
  BoundingBox bounds() const;

 private:
  std::shared_ptr<const Graph> graph_;
  Eigen::Matrix2Xd positions_;
};

struct PreprocessResult {
  Graph graph;
  /// original_id[new id] = id in the input graph.
  std::vector<VertexId> original_id;
};

/// Largest connected component (ties: the one containing the smallest vertex
/// id), then iterative removal of degree-1 vertices. Throws EmptyGraphError if
/// nothing remains.
PreprocessResult preprocess(const Graph& g);

class EmptyGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square with the center of the smallest enclosing axis-aligned square of
/// the drawing and twice its side. If all vertices coincide the result is the
/// unit square centered on them.
BoundingBox movement_square(const Drawing& d);

/// Summary of general-position violations in a drawing.
struct PositionDefects {
  std::vector<VertexId> offenders;
  std::size_t coincident_pairs = 0;
  std::size_t vertex_on_edge = 0;
  std::size_t collinear_overlaps = 0;

  bool empty() const { return offenders.empty(); }
};

PositionDefects find_position_defects(const Drawing& d);

/// Jitters offending vertices by at most 1e-9 times the bounding-box diagonal
/// until no defect remains. Throws DegeneracyError after `max_rounds` rounds.
/// Returns the number of rounds used.
int enforce_general_position(Drawing& d, std::mt19937_64& rng, int max_rounds = 10);

}  // namespace crossmin
