#include <doctest.h>

#include "oracles/brute.hpp"

#include "crossmin/generators.hpp"
#include "crossmin/stats.hpp"

using namespace crossmin;

TEST_CASE("exact Mann-Whitney equals permutation enumeration") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> value(0, 4);  // small range forces ties
  for (std::size_t na = 1; na <= 9; ++na) {
    for (std::size_t nb = 1; na + nb <= 10; ++nb) {
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> a(na), b(nb);
        for (double& x : a) x = value(rng);
        for (double& x : b) x = value(rng);
        const MannWhitneyResult r = mann_whitney_u(a, b);
        const oracle::PermutationP p = oracle::permutation_mann_whitney(a, b);
        CHECK(r.exact);
        CHECK(r.p_less == doctest::Approx(p.less).epsilon(1e-12));
        CHECK(r.p_greater == doctest::Approx(p.greater).epsilon(1e-12));
        CHECK(r.p_two_sided == doctest::Approx(p.two_sided).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("U counts dominating pairs") {
  const std::vector<double> a{3, 5, 7}, b{1, 5, 6, 8};
  // 3>1; 5>1, 5=5; 7>1,5,6 -> 1 + 1.5 + 3
  CHECK(mann_whitney_u(a, b).u == doctest::Approx(5.5));
  CHECK_THROWS_AS(mann_whitney_u(std::vector<double>{}, b), std::invalid_argument);
}

TEST_CASE("normal approximation matches reference values") {
  // Reference p-values from an independent implementation (tie and
  // continuity corrected).
  const std::vector<double> a{3, 5, 5, 7, 8, 9, 9, 9, 12, 15}, b{1, 2, 5, 5, 6, 7, 7, 10, 11, 11};
  const MannWhitneyResult r = mann_whitney_u(a, b);
  CHECK_FALSE(r.exact);
  CHECK(r.u == 62.0);
  CHECK(r.p_two_sided == doctest::Approx(0.38125022508323214).epsilon(1e-9));
  CHECK(r.p_less == doctest::Approx(0.8293839818916047).epsilon(1e-9));
  CHECK(r.p_greater == doctest::Approx(0.19062511254161607).epsilon(1e-9));
  const std::vector<double> c{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}, d{14, 15, 16};
  CHECK(mann_whitney_u(c, d).p_two_sided == doctest::Approx(0.01058354713701517).epsilon(1e-9));
  // All values tied: no evidence either way.
  const std::vector<double> e(8, 2.0), f(7, 2.0);
  CHECK(mann_whitney_u(e, f).p_two_sided == 1.0);
}

TEST_CASE("degree histogram and mean") {
  const DegreeHistogram h = degree_histogram(Graph(4, {{0, 1}, {1, 2}, {1, 3}}));
  CHECK(h.counts.at(1) == 3);
  CHECK(h.counts.at(3) == 1);
  CHECK(h.mean == doctest::Approx(1.5));
  const DegreeHistogram k = degree_histogram(complete_graph(6));
  CHECK(k.counts.size() == 1);
  CHECK(k.counts.at(5) == 6);
}

TEST_CASE("mean and sample standard deviation") {
  const std::vector<double> v{2, 4, 4, 4, 5, 5, 7, 9};
  const MeanStd m = mean_std(v);
  CHECK(m.mean == doctest::Approx(5.0));
  CHECK(m.std == doctest::Approx(std::sqrt(32.0 / 7.0)));
  CHECK(m.n == 8);
  CHECK(mean_std(std::vector<double>{3.0}).std == 0.0);
}
