#include <random>

#include "doctest.h"
#include "gme/graph_gm.hpp"
#include "gme/pure_gm.hpp"
#include "oracles.hpp"

using namespace gme;

TEST_CASE("graph construction and parsing") {
  CHECK(GraphSpec::path(4).edges().size() == 3);
  CHECK(GraphSpec::ring(5).edges().size() == 5);
  const auto g = GraphSpec::parse("0-1, 1-2,2-3");
  CHECK(g.vertex_count() == 4);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(GraphSpec::parse("0-1", 5).vertex_count() == 5);
  CHECK_THROWS_AS(GraphSpec::parse("0-1,2"), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec::parse("0-1x"), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("maximum independent sets match exhaustive search") {
  std::mt19937_64 rng(77);
  std::bernoulli_distribution coin(0.35);
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 8;
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (coin(rng)) e.emplace_back(a, b);
      }
    }
    const GraphSpec g(n, e);
    CHECK(static_cast<int>(maximum_independent_set(g).size()) == oracle::mis_size(n, e));
  }
}

TEST_CASE("lexicographically smallest choice") {
  CHECK(maximum_independent_set(GraphSpec::path(4)) == std::vector<int>{0, 2});
  CHECK(maximum_independent_set(GraphSpec::ring(6)) == std::vector<int>{0, 2, 4});
  CHECK(maximum_independent_set(GraphSpec(3, {{0, 1}, {1, 2}, {0, 2}})) == std::vector<int>{0});
}

TEST_CASE("graph state amplitudes") {
  const auto psi = build_graph_state(GraphSpec::path(2));
  // |++> then CZ: the |11> amplitude flips sign
  CHECK(psi.amplitudes()(0).real() == doctest::Approx(0.5));
  CHECK(psi.amplitudes()(3).real() == doctest::Approx(-0.5));
}

TEST_CASE("analysis of small graphs") {
  const auto a = analyze_graph(GraphSpec::path(4));
  CHECK(a.beta == std::vector<int>{1, 3});
  CHECK(a.d_alpha == 4);
  REQUIRE(a.lambda2.has_value());
  CHECK(*a.lambda2 == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(a.minimal_rank == true);
  const auto tri = analyze_graph(GraphSpec(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(*tri.lambda2 == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(tri.d_alpha == 4);
  CHECK(tri.minimal_rank == false);
}

TEST_CASE("universal closest separable state identities") {
  for (const auto& g : {GraphSpec::path(2), GraphSpec::path(4), GraphSpec::ring(4), GraphSpec::ring(6)}) {
    const auto r = verify_universal_css(g);
    const double l = r.lambda2;
    CHECK(l == doctest::Approx(1.0 / static_cast<double>(r.d_alpha)).epsilon(1e-9));
    CHECK(r.trace_distance == doctest::Approx(1.0 - l).epsilon(1e-9));
    CHECK(r.fidelity_squared == doctest::Approx(l).epsilon(1e-9));
    CHECK(r.relative_entropy == doctest::Approx(-std::log2(l)).epsilon(1e-9));
    CHECK(r.spectrum_error < 1e-9);
    CHECK(r.projector_error < 1e-9);
    CHECK_FALSE(r.bounds_only);
  }
  CHECK(verify_universal_css(GraphSpec(3, {{0, 1}, {1, 2}, {0, 2}})).bounds_only);
}

TEST_CASE("stabilizer form of delta agrees with the branch construction") {
  const auto g = GraphSpec::ring(4);
  const auto a = analyze_graph(g);
  const auto d1 = build_delta(g, a).delta;
  const auto d2 = stabilizer_projector_delta(g, a);
  CHECK((d1.matrix() - d2.matrix()).norm() < 1e-12);
}
