#pragma once

#include "crossmin/graph.hpp"

#include <Eigen/Core>

#include <cmath>
#include <random>
#include <vector>

namespace crossmin {

struct StressParams {
  int max_iterations = 200;
  double tolerance = 1e-4;
  /// Side of the initial grid; 0 means |E|.
  std::size_t grid_side = 0;
};

template <class Scalar>
using Layout = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

/// Unweighted all-pairs shortest paths. Throws std::invalid_argument if the
/// graph is disconnected.
Eigen::MatrixXi bfs_distances(const Graph& g);

/// Every coordinate uniform on {0, ..., m - 1}; vertices landing on an
/// occupied grid point are redrawn. Throws std::invalid_argument for m < 2.
Drawing random_grid_init(std::shared_ptr<const Graph> g, std::size_t m, std::mt19937_64& rng);

/// Sum over pairs of d^-2 (|x_i - x_j| - d)^2.
template <class Scalar>
Scalar stress(const Layout<Scalar>& x, const Eigen::MatrixXi& dist) {
  Scalar s(0);
  for (Eigen::Index i = 0; i < x.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < x.cols(); ++j) {
      const Scalar d = static_cast<Scalar>(dist(i, j));
      const Scalar r = (x.col(i) - x.col(j)).norm() - d;
      s += r * r / (d * d);
    }
  }
  return s;
}

/// One Gauss-Seidel sweep of localized majorization: each vertex in turn
/// moves to the minimizer of the stress majorant in its own position.
template <class Scalar>
void majorization_sweep(Layout<Scalar>& x, const Eigen::MatrixXi& dist) {
  const Eigen::Index n = x.cols();
  for (Eigen::Index i = 0; i < n; ++i) {
    Vec2<Scalar> num = Vec2<Scalar>::Zero();
    Scalar den(0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const Scalar d = static_cast<Scalar>(dist(i, j));
      const Scalar w = Scalar(1) / (d * d);
      const Vec2<Scalar> diff = x.col(i) - x.col(j);
      const Scalar len = diff.norm();
      num += w * x.col(j);
      if (len > Scalar(0)) num += w * d * diff / len;
      den += w;
    }
    if (den > Scalar(0)) x.col(i) = num / den;
  }
}

/// Sweeps until max_iterations or until the relative stress decrease drops
/// below tolerance. Returns the stress before the first and after every sweep.
template <class Scalar>
std::vector<Scalar> majorize(Layout<Scalar>& x, const Eigen::MatrixXi& dist,
                             const StressParams& params) {
  std::vector<Scalar> trace{stress(x, dist)};
  for (int it = 0; it < params.max_iterations; ++it) {
    majorization_sweep(x, dist);
    const Scalar prev = trace.back();
    const Scalar cur = stress(x, dist);
    trace.push_back(cur);
    if (prev <= Scalar(0) || (prev - cur) / prev < static_cast<Scalar>(params.tolerance)) break;
  }
  return trace;
}

/// majorize on a drawing, then restores general position.
std::vector<double> majorize(Drawing& d, const StressParams& params, std::mt19937_64& rng);

/// random_grid_init followed by majorize.
Drawing stress_layout(std::shared_ptr<const Graph> g, const StressParams& params,
                      std::mt19937_64& rng, std::vector<double>* trace = nullptr);

}  // namespace crossmin
