#include "crossmin/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace crossmin {

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Drawing convex_complete_drawing(std::size_t n) {
  auto g = std::make_shared<const Graph>(complete_graph(n));
  Eigen::Matrix2Xd pos(2, static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pos.col(static_cast<Eigen::Index>(i)) << std::cos(a), std::sin(a);
  }
  return Drawing(std::move(g), std::move(pos));
}

Graph random_regular_graph(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if ((n * k) % 2 != 0 || k >= n) {
    throw std::invalid_argument("random_regular_graph: need n*k even and k < n");
  }
  // Pair free points of distinct, not yet adjacent vertices one at a time;
  // restart whenever the remaining points admit no valid pair.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<VertexId> points;
    for (VertexId v = 0; v < n; ++v) points.insert(points.end(), k, v);
    std::set<std::pair<VertexId, VertexId>> edges;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      stuck = true;
      for (int tries = 0; tries < 100; ++tries) {
        std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        const VertexId a = points[i], b = points[j];
        if (a == b || edges.count({std::min(a, b), std::max(a, b)})) continue;
        edges.emplace(std::min(a, b), std::max(a, b));
        if (i < j) std::swap(i, j);
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
        stuck = false;
        break;
      }
    }
    if (stuck) continue;
    std::vector<Edge> list;
    for (const auto& [a, b] : edges) list.push_back({a, b});
    return Graph(n, std::move(list));
  }
  throw std::runtime_error("random_regular_graph: pairing kept failing");
}

Graph random_graph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  if (n < 2 || m > n * (n - 1) / 2) throw std::invalid_argument("random_graph: too many edges");
  std::set<std::pair<VertexId, VertexId>> edges;
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  while (edges.size() < m) {
    const VertexId a = pick(rng), b = pick(rng);
    if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Edge> list;
  for (const auto& [a, b] : edges) list.push_back({a, b});
  return Graph(n, std::move(list));
}

Drawing random_drawing(std::shared_ptr<const Graph> g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::Matrix2Xd pos(2, static_cast<Eigen::Index>(g->vertex_count()));
  for (Eigen::Index i = 0; i < pos.cols(); ++i) pos.col(i) << unit(rng), unit(rng);
  return Drawing(std::move(g), std::move(pos));
}

Drawing grid_triangulation(std::size_t rows, std::size_t cols, double jitter,
                           std::mt19937_64& rng) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("grid_triangulation: grid too small");
  const auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  std::vector<Edge> edges;
  std::bernoulli_distribution flip(0.5);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
      if (r + 1 < rows && c + 1 < cols) {
        if (flip(rng)) {
          edges.push_back({id(r, c), id(r + 1, c + 1)});
        } else {
          edges.push_back({id(r, c + 1), id(r + 1, c)});
        }
      }
    }
  }
  auto g = std::make_shared<const Graph>(rows * cols, std::move(edges));
  std::uniform_real_distribution<double> offset(-jitter, jitter);
  Eigen::Matrix2Xd pos(2, static_cast<Eigen::Index>(rows * cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      pos.col(id(r, c)) << static_cast<double>(c) + offset(rng),
          static_cast<double>(r) + offset(rng);
    }
  }
  return Drawing(std::move(g), std::move(pos));
}

}  // namespace crossmin
