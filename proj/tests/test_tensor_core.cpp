#include "doctest.h"
#include "gme/families.hpp"
#include "gme/tensor_core.hpp"

using namespace gme;

namespace {

DensityMatrix diag(const Space& s, std::vector<double> p) {
  Matrix m = Matrix::Zero(s.total_dim(), s.total_dim());
  for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<Index>(i), static_cast<Index>(i)) = p[i];
  return DensityMatrix(s, m);
}

}  // namespace

TEST_CASE("space validation and budget") {
  CHECK(Space({2, 3}).total_dim() == 6);
  CHECK_THROWS_AS(Space({}), std::invalid_argument);
  CHECK_THROWS_AS(Space({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Space({64, 65}), std::length_error);
  CHECK(Space({64, 64}).total_dim() == 4096);
  CHECK(Space({2, 3, 4}).strides() == std::vector<Index>{12, 4, 1});
}

TEST_CASE("state validation") {
  Vector v = Vector::Zero(4);
  v(0) = 1.0;
  CHECK_NOTHROW(PureState(Space({2, 2}), v));
  CHECK_THROWS_AS(PureState(Space({2, 2}), 2.0 * v), std::invalid_argument);
  CHECK_THROWS_AS(PureState::normalized(Space({2, 2}), Vector::Zero(4)), std::invalid_argument);
  Matrix m = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(Space({2}), m), std::invalid_argument);  // trace 2
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(Space({2}), neg), std::invalid_argument);
  Matrix nh = Matrix::Identity(2, 2) / 2.0;
  nh(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(Space({2}), nh), std::invalid_argument);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
  const auto rho = make_mes(2).projector();
  const auto a = partial_trace(rho, std::vector<int>{0});
  CHECK((a.matrix() - Matrix::Identity(2, 2) / 2.0).norm() < 1e-14);
}

TEST_CASE("partial trace keeps party order and dimensions") {
  std::mt19937_64 rng(3);
  const Space s({2, 3, 2});
  const auto rho = random_mixed(s, rng);
  const auto r02 = partial_trace(rho, std::vector<int>{2, 0});
  CHECK(r02.space() == Space({2, 2}));
  const auto r0 = partial_trace(r02, std::vector<int>{0});
  CHECK((r0.matrix() - partial_trace(rho, std::vector<int>{0}).matrix()).norm() < 1e-13);
}

TEST_CASE("partial transpose of a Bell state has eigenvalue -1/2") {
  const auto pt = partial_transpose(make_mes(2).projector(), std::vector<int>{1});
  CHECK(hermitian_eigen(pt).values(0) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("distances between diagonal states") {
  const Space s({2});
  const auto a = diag(s, {0.9, 0.1});
  const auto b = diag(s, {0.5, 0.5});
  CHECK(trace_distance(a, b) == doctest::Approx(0.4));
  const double f = std::sqrt(0.45) + std::sqrt(0.05);
  CHECK(fidelity(a, b) == doctest::Approx(f));
  CHECK(bures_distance(a, b) == doctest::Approx(std::sqrt(2.0 - 2.0 * f)));
  CHECK(relative_entropy(a, b) == doctest::Approx(0.9 * std::log2(1.8) + 0.1 * std::log2(0.2)));
  CHECK(fidelity(a, a) == doctest::Approx(1.0));
  CHECK(trace_distance(a, a) == doctest::Approx(0.0));
}

TEST_CASE("relative entropy is infinite on a support leak") {
  const Space s({2});
  CHECK(std::isinf(relative_entropy(diag(s, {0.5, 0.5}), diag(s, {1.0, 0.0}))));
  CHECK(relative_entropy(diag(s, {1.0, 0.0}), diag(s, {0.5, 0.5})) == doctest::Approx(1.0));
}

TEST_CASE("entropies") {
  const auto e = entropies(DensityMatrix::maximally_mixed(Space({2, 2})));
  CHECK(e.von_neumann == doctest::Approx(2.0));
  CHECK(e.linear == doctest::Approx(0.75));
  const auto p = entropies(make_mes(3).projector());
  CHECK(p.von_neumann == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("kron and tensor assembly agree") {
  Vector a(2);
  a << 1.0, 0.0;
  Vector b(3);
  b << 0.0, Complex(0.0, 1.0), 0.0;
  const PureState psi = tensor_assemble(ProductState({a, b}));
  CHECK((psi.amplitudes() - kron(Matrix(a), Matrix(b)).col(0)).norm() < 1e-15);
  CHECK_THROWS_AS(tensor_assemble(ProductState({a, b}), Space({3, 2})), std::invalid_argument);
}

TEST_CASE("permuting parties twice restores the vector") {
  std::mt19937_64 rng(5);
  const Space s({2, 3, 4});
  const Vector v = random_pure(s, rng).amplitudes();
  const Vector w = permute_parties(v, s.dims(), {2, 0, 1});
  // Output party k is input party perm[k]: dims become {4, 2, 3}; {1, 2, 0} undoes it.
  const Vector back = permute_parties(w, {4, 2, 3}, {1, 2, 0});
  CHECK((back - v).norm() < 1e-14);
}

TEST_CASE("same-space tensor of two Bell states is a four-level MES") {
  const auto t = same_space_tensor(make_mes(2), make_mes(2));
  CHECK(t.space() == Space({4, 4}));
  CHECK(std::norm(t.amplitudes().dot(make_mes(4).amplitudes())) == doctest::Approx(1.0));
}
