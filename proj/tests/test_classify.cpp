#include "doctest.h"
#include "gme/classify.hpp"
#include "gme/families.hpp"

using namespace gme;

namespace {

DensityMatrix product00() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  return DensityMatrix(Space({2, 2}), m);
}

}  // namespace

TEST_CASE("labels for the basic sets") {
  CHECK(classify(product00()).label == ClassLabel::A);
  CHECK(classify(make_mes(2).projector()).label == ClassLabel::B);
  CHECK(classify(make_ghz(3).projector()).label == ClassLabel::B);
  CHECK(classify(DensityMatrix::maximally_mixed(Space({2, 2}))).label == ClassLabel::C);
  CHECK(classify(make_isotropic(IsotropicSpec::from_f(3, 0.3))).label == ClassLabel::C);
}

TEST_CASE("isotropic and maximally correlated labels") {
  const auto iso = classify(make_isotropic(IsotropicSpec::from_f(3, 0.9)));
  CHECK(iso.label == ClassLabel::D2);
  CHECK(iso.evidence.path == "isotropic");
  CHECK(classify_maxcorr(MaxCorrSpec::rank2(1, 3, 0.95)).label == ClassLabel::D3);
  CHECK(classify_maxcorr(MaxCorrSpec::rank2(1, 3, 0.5)).label == ClassLabel::D1);
  CHECK(classify_maxcorr(MaxCorrSpec::rank2(2, 2, 0.3)).label == ClassLabel::D2);
  CHECK(classify(make_maxcorr(MaxCorrSpec::rank2(1, 3, 0.95))).label == ClassLabel::D3);
}

TEST_CASE("evidence carries the three logarithmic values") {
  const auto c = classify_maxcorr(MaxCorrSpec::rank2(1, 3, 0.5));
  REQUIRE(c.evidence.g_f_log.has_value());
  REQUIRE(c.evidence.g_c_log.has_value());
  REQUIRE(c.evidence.g_m_log.has_value());
  CHECK(*c.evidence.g_f_log < *c.evidence.g_c_log);
  CHECK(*c.evidence.g_c_log < *c.evidence.g_m_log);
}

TEST_CASE("recognition tolerates phases inside a block") {
  const auto spec = MaxCorrSpec::rank2(1, 3, 0.4);
  Matrix m = make_maxcorr(spec).matrix();
  const Matrix u = Eigen::Vector4cd(1.0, std::polar(1.0, 0.3), std::polar(1.0, -1.1), Complex(0.0, 1.0))
                       .asDiagonal();
  m = kron(u, Matrix::Identity(4, 4)) * m * kron(u, Matrix::Identity(4, 4)).adjoint();
  const auto r = recognize_maxcorr(DensityMatrix(Space({4, 4}), m));
  REQUIRE(r.has_value());
  CHECK(r->partition == std::vector<int>{0, 1, 4});
  CHECK(r->weights[0] == doctest::Approx(0.4));
}

TEST_CASE("recognizers reject other states") {
  std::mt19937_64 rng(3);
  const auto rho = random_mixed(Space({3, 3}), rng);
  CHECK_FALSE(recognize_maxcorr(rho).has_value());
  CHECK_FALSE(recognize_isotropic(rho).has_value());
  const auto iso = recognize_isotropic(make_isotropic(IsotropicSpec::from_p(3, 0.25)));
  REQUIRE(iso.has_value());
  CHECK(iso->p() == doctest::Approx(0.25));
}

TEST_CASE("partial transpose test") {
  CHECK(min_partial_transpose_eigenvalue(make_mes(2).projector()) == doctest::Approx(-0.5));
  CHECK(min_partial_transpose_eigenvalue(product00()) == doctest::Approx(0.0));
}

TEST_CASE("label names") {
  CHECK(to_string(ClassLabel::D3) == "D3");
  CHECK(to_string(ClassLabel::A) == "A");
}
