#include "doctest.h"
#include "gme/appendix.hpp"
#include "oracles.hpp"

using namespace gme;

TEST_CASE("isotropic trace-distance value") {
  CHECK(gt_isotropic_closed(2, 0.0) == doctest::Approx(0.5));
  CHECK(gt_isotropic_closed(2, 1.0) == doctest::Approx(0.5625));
  CHECK(gt_isotropic_closed(3, 1.0) == doctest::Approx(64.0 / 81.0));
  CHECK(gt_isotropic_closed(2, 0.5) == doctest::Approx(0.467879).epsilon(1e-6));
  for (double p = 0.0; p <= 1.0; p += 0.125) CHECK(gt_isotropic_closed(4, p) == doctest::Approx(oracle::gt_iso(4, p)));
  CHECK_THROWS_AS(gt_isotropic_closed(1, 0.5), std::invalid_argument);
}

TEST_CASE("concavity counterexample") {
  const auto c = gt_concavity_counterexample(2, 0.5);
  CHECK(c.violated);
  CHECK(c.lhs < c.rhs);
  CHECK_FALSE(gt_concavity_counterexample(2, 0.0).violated);
}

TEST_CASE("constrained logarithmic minimum") {
  const auto c = constrained_log_min(3, 2.0, 1.0, 0.5, 5000, 4);
  CHECK(c.value == doctest::Approx(1.5 * std::log2(3.0)));
  CHECK(c.best_sample >= c.value - 1e-9);
  CHECK_FALSE(c.beaten);
  CHECK_THROWS_AS(constrained_log_min(0, 2.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("rank-2 minimum against the three-case formula and the grid") {
  for (auto [m, n, q] : std::vector<std::tuple<int, int, double>>{
           {1, 2, 0.3}, {1, 3, 0.5}, {1, 3, 0.95}, {1, 5, 0.2}, {1, 5, 0.8}, {2, 7, 0.1}, {2, 7, 0.9}, {3, 3, 0.5}}) {
    const FhsSpec s{m, n, q};
    const auto exact = fhs_minimum(s);
    CHECK(exact.value == doctest::Approx(oracle::fhs_min(m, n, q)).epsilon(1e-9));
    CHECK(fhs_objective(s, exact.h, exact.s) == doctest::Approx(exact.value).epsilon(1e-9));
    CHECK(fhs_grid_minimum(s).value >= exact.value - 1e-9);
    CHECK(fhs_grid_minimum(s).value == doctest::Approx(exact.value).epsilon(2e-4));
  }
}

TEST_CASE("continuity across the regime boundaries") {
  const double e = std::numbers::e;
  // ratio boundary m/n = 1/e is not reachable with integers; the q boundary is
  const int m = 1;
  const int n = 5;
  const double qb = e * m / n;
  CHECK(fhs_minimum({m, n, qb - 1e-9}).value == doctest::Approx(fhs_minimum({m, n, qb + 1e-9}).value).epsilon(1e-7));
  CHECK(fhs_minimum({m, n, qb + 1e-3}).regime != fhs_minimum({m, n, qb - 1e-3}).regime);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((FhsSpec{0, 2, 0.5}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FhsSpec{1, 2, 1.5}.validate()), std::invalid_argument);
}
