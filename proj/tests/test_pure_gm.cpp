#include "doctest.h"
#include "gme/families.hpp"
#include "gme/pure_gm.hpp"
#include "oracles.hpp"

using namespace gme;

TEST_CASE("maximally entangled states, exact and iterative") {
  OptimizerOptions numeric;
  numeric.exact_bipartite = false;
  for (int d = 2; d <= 6; ++d) {
    CHECK(lambda2_pure(make_mes(d)).lambda2 == doctest::Approx(1.0 / d).epsilon(1e-12));
    CHECK(lambda2_pure(make_mes(d), numeric).lambda2 == doctest::Approx(1.0 / d).epsilon(1e-9));
  }
}

TEST_CASE("multiparty benchmarks") {
  CHECK(lambda2_pure(make_ghz(3)).lambda2 == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(lambda2_pure(make_ghz(3, 3)).lambda2 == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
    CHECK(lambda2_pure(make_dicke(n, k)).lambda2 == doctest::Approx(oracle::dicke_lambda2(n, k)).epsilon(1e-9));
  }
}

TEST_CASE("certificate reproduces the value") {
  std::mt19937_64 rng(2);
  const auto psi = random_pure(Space({2, 3, 2}), rng);
  const auto r = lambda2_pure(psi);
  CHECK(std::norm(r.cps.vector().dot(psi.amplitudes())) == doctest::Approx(r.lambda2).epsilon(1e-12));
  CHECK(r.lambda2 <= 1.0);
  CHECK(r.lambda2 >= 0.25 - 1e-12);  // some basis pair on the qubits carries a quarter of the norm
}

TEST_CASE("product states have lambda2 one") {
  Vector a(2);
  a << 0.6, Complex(0.0, 0.8);
  Vector b(3);
  b << 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0);
  const auto psi = tensor_assemble(ProductState({a, b, a}));
  CHECK(lambda2_pure(psi).lambda2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("deterministic and monotone in the restart count") {
  std::mt19937_64 rng(9);
  const auto psi = random_pure(Space({3, 3, 3}), rng);
  OptimizerOptions o;
  o.seed = 17;
  const double a = lambda2_pure(psi, o).lambda2;
  CHECK(lambda2_pure(psi, o).lambda2 == a);
  double prev = 0.0;
  for (int r : {1, 2, 4, 8, 16}) {
    o.restarts = r;
    const double v = lambda2_pure(psi, o).lambda2;
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("warm start is kept when nothing beats it") {
  const auto psi = make_ghz(3);
  Vector zero(2);
  zero << 1.0, 0.0;
  OptimizerOptions o;
  o.restarts = 0;
  const auto r = lambda2_pure(psi, o, {ProductState({zero, zero, zero})});
  CHECK(r.lambda2 == doctest::Approx(0.5));
}

TEST_CASE("log and linear forms") {
  const auto g = gm_from_lambda2(0.25);
  CHECK(g.g == doctest::Approx(0.75));
  CHECK(g.g_log == doctest::Approx(2.0));
  const auto b = gm_pure(make_mes(2));
  CHECK(b.g == doctest::Approx(0.5));
  CHECK(b.g_log == doctest::Approx(1.0));
}
