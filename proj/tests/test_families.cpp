#include "doctest.h"
#include "gme/families.hpp"
#include "gme/mixed_gm.hpp"
#include "oracles.hpp"

using namespace gme;

TEST_CASE("constructors are normalized with the expected supports") {
  CHECK(make_mes(3).amplitudes().norm() == doctest::Approx(1.0));
  CHECK(std::abs(make_ghz(3).amplitudes()(7)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(make_w(3).amplitudes()(1)) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(std::abs(make_dicke(4, 2).amplitudes()(3)) == doctest::Approx(1.0 / std::sqrt(6.0)));
  CHECK_THROWS_AS(make_mes(1), std::invalid_argument);
  CHECK_THROWS_AS(make_dicke(3, 4), std::invalid_argument);
}

TEST_CASE("random states honor the requested rank") {
  std::mt19937_64 rng(1);
  const auto rho = random_mixed(Space({2, 3}), rng, 2);
  CHECK(numerical_rank(rho.matrix()) == 2);
}

TEST_CASE("isotropic parametrizations agree") {
  const auto a = IsotropicSpec::from_p(3, 0.4);
  const auto b = IsotropicSpec::from_f(3, a.f());
  CHECK(b.p() == doctest::Approx(0.4));
  const auto rho = make_isotropic(a);
  CHECK(make_mes(3).amplitudes().dot(rho.matrix() * make_mes(3).amplitudes()).real() == doctest::Approx(a.f()));
  CHECK_THROWS_AS(IsotropicSpec::from_p(2, 1.2), std::invalid_argument);
}

TEST_CASE("isotropic closed forms") {
  for (double f : {0.3, 0.5, 0.9}) {
    const auto spec = IsotropicSpec::from_f(2, f);
    const auto c = iso_closed_forms(spec);
    CHECK(c.separable == (f <= 0.5));
    CHECK(c.g_fc == doctest::Approx(oracle::iso_gfc(2, f)));
    CHECK(c.g_fc_log == doctest::Approx(oracle::iso_gfc_log(2, f)));
    CHECK(c.gt == doctest::Approx(oracle::gt_iso(2, spec.p())));
    CHECK(c.lambda2m == doctest::Approx(lambda2_mixed(make_isotropic(spec)).lambda2m).epsilon(1e-10));
  }
}

TEST_CASE("maximally correlated specs") {
  CHECK_THROWS_AS((MaxCorrSpec{4, {0, 2, 3}, {0.5, 0.5}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((MaxCorrSpec{4, {0, 2, 4}, {0.7, 0.7}}.validate()), std::invalid_argument);
  const auto s = MaxCorrSpec::rank2(1, 3, 0.5);
  CHECK(s.d == 4);
  CHECK(s.block(1) == 3);
  const auto rho = make_maxcorr(s);
  CHECK(numerical_rank(rho.matrix()) == 2);
  CHECK(maxcorr_theta(s, 1).amplitudes().norm() == doctest::Approx(1.0));
}

TEST_CASE("rank-2 logarithmic roof reference points") {
  CHECK(rank2_log_roof(2, 2, 0.5).value == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(rank2_log_roof(1, 3, 0.95).value == doctest::Approx(0.0740).epsilon(1e-3));
  CHECK(rank2_log_roof(1, 3, 0.5).value == doctest::Approx(0.7888).epsilon(1e-3));
  for (auto [m, n, q] : std::vector<std::tuple<int, int, double>>{{1, 3, 0.2}, {1, 5, 0.7}, {2, 3, 0.4}, {1, 8, 0.1}}) {
    CHECK(rank2_log_roof(m, n, q).value == doctest::Approx(oracle::fhs_min(m, n, q)).epsilon(1e-6));
  }
}

TEST_CASE("maximally correlated closed forms") {
  const auto c = maxcorr_closed_forms(MaxCorrSpec::rank2(1, 3, 0.5));
  REQUIRE(c.g_c_log.has_value());
  CHECK(*c.g_c_log == doctest::Approx(0.7888).epsilon(1e-3));
  CHECK(c.g_m_log >= *c.g_c_log);
  CHECK(c.g_f_log <= *c.g_c_log + 1e-12);
  const auto eq = maxcorr_closed_forms(MaxCorrSpec{6, {0, 2, 4, 6}, {0.2, 0.3, 0.5}});
  REQUIRE(eq.g_c_log.has_value());
  CHECK(eq.g_c_log_source == "equal blocks");
  CHECK(*eq.g_c_log == doctest::Approx(1.0));
}

TEST_CASE("two-qubit closed forms") {
  const auto c = two_qubit_closed_forms(make_mes(2).projector());
  CHECK(c.concurrence == doctest::Approx(1.0));
  CHECK(c.g_c == doctest::Approx(0.5));
  CHECK(c.g_c_log == doctest::Approx(1.0));
  std::mt19937_64 rng(6);
  const auto rho = random_mixed(Space({2, 2}), rng, 2);
  // the oracle takes square roots of near-zero eigenvalues on a rank-2 input
  CHECK(std::abs(two_qubit_closed_forms(rho).concurrence - oracle::concurrence(rho.matrix())) < 1e-7);
  CHECK_THROWS_AS(two_qubit_closed_forms(make_mes(3).projector()), std::invalid_argument);
}
