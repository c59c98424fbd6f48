#include "doctest.h"
#include "gme/families.hpp"
#include "gme/mixed_gm.hpp"
#include "oracles.hpp"

using namespace gme;

TEST_CASE("trace-inner-product extension on simple states") {
  CHECK(lambda2_mixed(DensityMatrix::maximally_mixed(Space({2, 2}))).lambda2m == doctest::Approx(0.25));
  CHECK(lambda2_mixed(make_mes(2).projector()).lambda2m == doctest::Approx(0.5));
  const auto g = gm_mixed(DensityMatrix::maximally_mixed(Space({2, 3})));
  CHECK(g.g_m == doctest::Approx(1.0 - 1.0 / 6.0));
  CHECK(g.g_m_log == doctest::Approx(std::log2(6.0)));
}

TEST_CASE("isotropic trace-inner-product value") {
  // max over product states of <phi|rho|phi> is p/d^2 + (1-p)/d
  for (int d : {2, 3}) {
    for (double p : {0.2, 0.7}) {
      const auto rho = make_isotropic(IsotropicSpec::from_p(d, p));
      CHECK(lambda2_mixed(rho).lambda2m == doctest::Approx(p / (d * d) + (1.0 - p) / d).epsilon(1e-10));
    }
  }
}

TEST_CASE("trace-distance value on endpoints") {
  Vector zero(2);
  zero << 1.0, 0.0;
  const auto prod = tensor_assemble(ProductState({zero, zero}));
  CHECK(gt(prod.projector()).value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(gt(DensityMatrix::maximally_mixed(Space({2, 2}))).value == doctest::Approx(0.5625));
  CHECK(gt(make_mes(2).projector()).value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("trace-distance value on the isotropic grid") {
  for (int d : {2, 3}) {
    for (double p : {0.1, 0.5, 0.9}) {
      const auto rho = make_isotropic(IsotropicSpec::from_p(d, p));
      CHECK(gt(rho).value == doctest::Approx(oracle::gt_iso(d, p)).epsilon(1e-6));
    }
  }
}

TEST_CASE("certificate and ordering against the trace-inner-product value") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 5; ++k) {
    const auto rho = random_mixed(Space({2, 2, 2}), rng, 3);
    const auto t = gt(rho);
    CHECK(gt_objective(rho, t.cps) == doctest::Approx(t.value).epsilon(1e-12));
    CHECK(t.value <= 1.0 - lambda2_mixed(rho).lambda2m + 5e-6);
    const auto m = lambda2_mixed(rho);
    CHECK(m.cps.vector().dot(rho.matrix() * m.cps.vector()).real() == doctest::Approx(m.lambda2m).epsilon(1e-12));
  }
}
