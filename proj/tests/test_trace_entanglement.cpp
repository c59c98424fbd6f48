#include "doctest.h"
#include "gme/families.hpp"
#include "gme/mixed_gm.hpp"
#include "gme/trace_entanglement.hpp"

using namespace gme;

TEST_CASE("bracket collapses on a Bell state") {
  const auto b = trace_ent_bracket(make_mes(2).projector());
  CHECK(b.lower == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(b.upper == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(b.lower_certified);
  CHECK(trace_distance(make_mes(2).projector(), b.witness_upper) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("separable input has a zero upper bound") {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  const auto b = trace_ent_bracket(DensityMatrix(Space({2, 2}), m));
  CHECK(b.upper == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(b.lower == 0.0);
}

TEST_CASE("bracket ordering on random mixed states") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 3; ++k) {
    const auto rho = random_mixed(Space({2, 2}), rng, 2);
    const auto b = trace_ent_bracket(rho);
    CHECK(b.lower <= b.upper);
    CHECK(b.upper <= gt(rho).value + 5e-6);
    const double td = trace_distance(rho, b.witness_upper);
    CHECK(td * td == doctest::Approx(b.upper).epsilon(1e-9));
    CHECK_FALSE(b.witness_kind.empty());
  }
}

TEST_CASE("supplied candidates are used") {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  const DensityMatrix sep(Space({2, 2}), m);
  const auto b = trace_ent_bracket(make_mes(2).projector(), {}, {sep});
  CHECK(b.upper <= 0.25 + 1e-12);
}

TEST_CASE("dephasing keeps the trace") {
  std::mt19937_64 rng(2);
  const auto rho = random_mixed(Space({2, 3}), rng);
  const auto d = dephase_in_product_basis(rho, lambda2_mixed(rho).cps);
  CHECK(d.matrix().trace().real() == doctest::Approx(1.0));
}
