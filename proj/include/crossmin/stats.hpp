#pragma once

#include "crossmin/graph.hpp"

#include <map>
#include <span>

namespace crossmin {

struct MannWhitneyResult {
  /// Pairs (x in a, y in b) with x > y, plus half the tied pairs.
  double u = 0.0;
  double p_two_sided = 1.0;
  /// P(U <= u) and P(U >= u) under the null.
  double p_less = 1.0;
  double p_greater = 1.0;
  bool exact = false;
};

/// Exact null distribution over all splits of the pooled ranks when
/// |a| + |b| <= 12; otherwise the normal approximation with tie and
/// continuity correction. Throws std::invalid_argument on an empty sample.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;
  double mean = 0.0;
};

DegreeHistogram degree_histogram(const Graph& g);

struct MeanStd {
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for a single value.
  double std = 0.0;
  std::size_t n = 0;
};

MeanStd mean_std(std::span<const double> values);

}  // namespace crossmin
