#pragma once

// Synthetic graphs and drawings for tests and benchmarks.

#include "crossmin/graph.hpp"

#include <random>

namespace crossmin {

Graph complete_graph(std::size_t n);

/// K_n with vertices on a regular n-gon of unit circumradius.
Drawing convex_complete_drawing(std::size_t n);

/// Uniform-ish random simple k-regular graph (pairing model with restarts).
/// Throws std::invalid_argument if n * k is odd or k >= n.
Graph random_regular_graph(std::size_t n, std::size_t k, std::mt19937_64& rng);

/// G(n, m): m distinct edges chosen uniformly.
Graph random_graph(std::size_t n, std::size_t m, std::mt19937_64& rng);

/// Uniform random positions in [0, 1]^2.
Drawing random_drawing(std::shared_ptr<const Graph> g, std::mt19937_64& rng);

/// rows x cols grid, every cell split by a randomly oriented diagonal, every
/// vertex displaced by up to `jitter` cell widths.
Drawing grid_triangulation(std::size_t rows, std::size_t cols, double jitter,
                           std::mt19937_64& rng);

}  // namespace crossmin
