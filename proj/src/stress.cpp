#include "crossmin/stress.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace crossmin {

Eigen::MatrixXi bfs_distances(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXi dist = Eigen::MatrixXi::Constant(n, n, -1);
  bool disconnected = false;
#pragma omp parallel for schedule(dynamic, 8) reduction(|| : disconnected)
  for (Eigen::Index s = 0; s < n; ++s) {
    std::deque<VertexId> queue{static_cast<VertexId>(s)};
    dist(s, s) = 0;
    Eigen::Index reached = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(v)) {
        if (dist(s, w) < 0) {
          dist(s, w) = dist(s, v) + 1;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached != n) disconnected = true;
  }
  if (disconnected) throw std::invalid_argument("bfs_distances: graph is disconnected");
  return dist;
}

Drawing random_grid_init(std::shared_ptr<const Graph> g, std::size_t m, std::mt19937_64& rng) {
  if (m < 2) throw std::invalid_argument("random_grid_init: grid side must be at least 2");
  const std::size_t n = g->vertex_count();
  std::uniform_int_distribution<std::size_t> coord(0, m - 1);
  std::set<std::pair<std::size_t, std::size_t>> used;
  Eigen::Matrix2Xd pos(2, static_cast<Eigen::Index>(n));
  for (std::size_t v = 0; v < n; ++v) {
    std::pair<std::size_t, std::size_t> p;
    int tries = 0;
    do {
      p = {coord(rng), coord(rng)};
    } while (used.count(p) && ++tries < 64);
    used.insert(p);
    pos.col(static_cast<Eigen::Index>(v)) << static_cast<double>(p.first),
        static_cast<double>(p.second);
  }
  return Drawing(std::move(g), std::move(pos));
}

std::vector<double> majorize(Drawing& d, const StressParams& params, std::mt19937_64& rng) {
  const Eigen::MatrixXi dist = bfs_distances(d.graph());
  Layout<double> x = d.positions();
  std::vector<double> trace = majorize(x, dist, params);
  for (Eigen::Index i = 0; i < x.cols(); ++i) d.set_position(static_cast<VertexId>(i), x.col(i));
  enforce_general_position(d, rng);
  return trace;
}

Drawing stress_layout(std::shared_ptr<const Graph> g, const StressParams& params,
                      std::mt19937_64& rng, std::vector<double>* trace) {
  const std::size_t side = params.grid_side ? params.grid_side : std::max<std::size_t>(2, g->edge_count());
  Drawing d = random_grid_init(std::move(g), side, rng);
  std::vector<double> t = majorize(d, params, rng);
  if (trace) *trace = std::move(t);
  return d;
}

}  // namespace crossmin
