#include "crossmin/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace crossmin {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Doubled midranks of the pooled sample, so every rank is an integer.
std::vector<long> doubled_midranks(std::span<const double> pooled) {
  const std::size_t n = pooled.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return pooled[i] < pooled[j];
  });
  std::vector<long> rank(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    // Positions i..j (1-based i+1..j+1) share the rank (i + j + 2) / 2.
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = static_cast<long>(i + j + 2);
    i = j + 1;
  }
  return rank;
}

}  // namespace

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("mann_whitney_u: empty sample");
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<long> r2 = doubled_midranks(pooled);
  const long base2 = static_cast<long>(na * (na + 1));  // 2 * na(na+1)/2
  long ra2 = 0;
  for (std::size_t i = 0; i < na; ++i) ra2 += r2[i];
  const long u2 = ra2 - base2;
  const double mu = 0.5 * static_cast<double>(na * nb);

  MannWhitneyResult out;
  out.u = 0.5 * static_cast<double>(u2);
  if (n <= 12) {
    out.exact = true;
    const long mu2 = static_cast<long>(na * nb);  // 2 * mu
    const long dev2 = std::abs(2 * u2 - mu2);
    std::size_t total = 0, le = 0, ge = 0, extreme = 0;
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(na), 1);
    std::sort(pick.begin(), pick.end());
    do {
      long s2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) s2 += r2[i];
      }
      const long v2 = s2 - base2;
      ++total;
      if (v2 <= u2) ++le;
      if (v2 >= u2) ++ge;
      if (std::abs(2 * v2 - mu2) >= dev2) ++extreme;
    } while (std::next_permutation(pick.begin(), pick.end()));
    out.p_less = static_cast<double>(le) / static_cast<double>(total);
    out.p_greater = static_cast<double>(ge) / static_cast<double>(total);
    out.p_two_sided = static_cast<double>(extreme) / static_cast<double>(total);
    return out;
  }

  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double ties = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    ties += t * t * t - t;
    i = j + 1;
  }
  const double nd = static_cast<double>(n);
  const double var = static_cast<double>(na * nb) / 12.0 * ((nd + 1.0) - ties / (nd * (nd - 1.0)));
  if (!(var > 0.0)) {
    out.p_less = out.p_greater = out.p_two_sided = 1.0;
    return out;
  }
  const double sigma = std::sqrt(var);
  const double dev = out.u - mu;
  out.p_less = normal_cdf((dev + 0.5) / sigma);
  out.p_greater = 1.0 - normal_cdf((dev - 0.5) / sigma);
  const double z = std::max(0.0, std::abs(dev) - 0.5) / sigma;
  out.p_two_sided = std::min(1.0, 2.0 * (1.0 - normal_cdf(z)));
  return out;
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++h.counts[g.degree(v)];
  if (g.vertex_count() > 0) {
    h.mean = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
  }
  return h;
}

MeanStd mean_std(std::span<const double> values) {
  MeanStd out;
  out.n = values.size();
  if (values.empty()) return out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(out.n);
  if (out.n > 1) {
    double ss = 0.0;
    for (double x : values) ss += (x - out.mean) * (x - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(out.n - 1));
  }
  return out;
}

}  // namespace crossmin
