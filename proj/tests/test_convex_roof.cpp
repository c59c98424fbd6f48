#include "doctest.h"
#include "gme/convex_roof.hpp"
#include "gme/families.hpp"
#include "gme/mixed_gm.hpp"
#include "oracles.hpp"

using namespace gme;

TEST_CASE("decomposition validation") {
  const auto bell = make_mes(2);
  CHECK_THROWS_AS(Decomposition({}), std::invalid_argument);
  CHECK_THROWS_AS(Decomposition({{0.5, bell}}), std::invalid_argument);
  CHECK_THROWS_AS(Decomposition({{1.5, bell}, {-0.5, bell}}), std::invalid_argument);
  const Decomposition d({{1.0, bell}});
  CHECK(d.reconstruction_error(bell.projector()) < 1e-15);
}

TEST_CASE("roof value forms") {
  const auto bell = make_mes(2);
  const Decomposition d({{0.5, bell}, {0.5, bell}});
  CHECK(roof_value(d, {0.5, 0.25}, RoofKind::linear) == doctest::Approx(0.625));
  CHECK(roof_value(d, {0.5, 0.25}, RoofKind::logarithmic) == doctest::Approx(1.5));
}

TEST_CASE("pure input reduces to the pure value") {
  const auto r = convex_roof(make_ghz(3).projector(), RoofKind::linear);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.decomposition.size() == 1);
}

TEST_CASE("isotropic roofs") {
  for (auto [d, f] : std::vector<std::pair<int, double>>{{2, 0.8}, {3, 0.6}, {2, 0.4}}) {
    const auto rho = make_isotropic(IsotropicSpec::from_f(d, f));
    const auto lin = convex_roof(rho, RoofKind::linear);
    CHECK(lin.value == doctest::Approx(oracle::iso_gfc(d, f)).epsilon(1e-6));
    CHECK(lin.decomposition.reconstruction_error(rho) < 1e-9);
    const auto fx = fidelity_extension(rho);
    CHECK(fx.g_f == doctest::Approx(oracle::iso_gfc(d, f)).epsilon(1e-6));
  }
}

TEST_CASE("two-qubit linear roof follows the concurrence") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 3; ++k) {
    const auto rho = random_mixed(Space({2, 2}), rng, 2);
    const double c = oracle::concurrence(rho.matrix());
    const auto r = convex_roof(rho, RoofKind::linear);
    CHECK(r.value == doctest::Approx(1.0 - oracle::two_qubit_lambda2(c)).epsilon(1e-5));
    const auto l = convex_roof(rho, RoofKind::logarithmic);
    CHECK(l.value == doctest::Approx(-std::log2(oracle::two_qubit_lambda2(c))).epsilon(1e-5));
  }
}

TEST_CASE("certified members reproduce the reported value") {
  std::mt19937_64 rng(8);
  const auto rho = random_mixed(Space({2, 2, 2}), rng, 2);
  const auto r = convex_roof(rho, RoofKind::linear);
  REQUIRE(r.per_member_lambda2.size() == r.decomposition.size());
  REQUIRE(r.per_member_cps.size() == r.decomposition.size());
  for (std::size_t i = 0; i < r.decomposition.size(); ++i) {
    const auto& psi = r.decomposition.members()[i].psi;
    CHECK(std::norm(r.per_member_cps[i].vector().dot(psi.amplitudes())) ==
          doctest::Approx(r.per_member_lambda2[i]).epsilon(1e-12));
  }
  CHECK(roof_value(r.decomposition, r.per_member_lambda2, RoofKind::linear) == doctest::Approx(r.value));
  CHECK(r.value <= 1.0 - lambda2_mixed(rho).lambda2m + 5e-6);
}

TEST_CASE("equal-overlap decomposition") {
  std::mt19937_64 rng(13);
  const auto rho = random_mixed(Space({2, 3}), rng, 3);
  const auto m = lambda2_mixed(rho);
  const PureState phi(rho.space(), m.cps.vector());
  const auto d = equal_overlap_decomposition(rho, phi);
  CHECK(d.reconstruction_error(rho) < 1e-10);
  for (const auto& w : d.members()) {
    CHECK(std::norm(phi.amplitudes().dot(w.psi.amplitudes())) == doctest::Approx(m.lambda2m).epsilon(1e-9));
  }
}
