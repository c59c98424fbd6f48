#include "gme/product_search.hpp"

#include <cmath>

namespace gme {

PartyLayout::PartyLayout(const Space& space) : space_(space) {
  const Index total = space_.total_dim();
  const int n = space_.parties();
  digits_.resize(static_cast<std::size_t>(total * n));
  for (Index i = 0; i < total; ++i) {
    Index rest = i;
    for (int p = n; p-- > 0;) {
      digits_[static_cast<std::size_t>(i * n + p)] = static_cast<int>(rest % space_.dim(p));
      rest /= space_.dim(p);
    }
  }
}

std::mt19937_64 restart_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Vector random_unit_vector(Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

Factors random_factors(const Space& space, std::mt19937_64& rng) {
  Factors f;
  f.reserve(static_cast<std::size_t>(space.parties()));
  for (int d : space.dims()) f.push_back(random_unit_vector(d, rng));
  return f;
}

Matrix random_isometry(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(rows, cols);
}

Vector product_vector(const Factors& factors) {
  Vector out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

namespace {

// prod_{k != party} f_k[digit_k(i)] for every flat index i.
Vector weights_except(const PartyLayout& layout, const Factors& factors, int party) {
  const Index total = layout.total_dim();
  Vector w(total);
  for (Index i = 0; i < total; ++i) {
    Complex c(1.0, 0.0);
    for (int k = 0; k < layout.parties(); ++k) {
      if (k != party) c *= factors[static_cast<std::size_t>(k)](layout.digit(i, k));
    }
    w(i) = c;
  }
  return w;
}

}  // namespace

Vector contract_except(const Vector& t, const PartyLayout& layout, const Factors& factors, int party) {
  const Vector w = weights_except(layout, factors, party);
  Vector out = Vector::Zero(layout.space().dim(party));
  for (Index i = 0; i < layout.total_dim(); ++i) out(layout.digit(i, party)) += std::conj(w(i)) * t(i);
  return out;
}

Matrix contract_operator_except(const Matrix& rho, const PartyLayout& layout, const Factors& factors, int party) {
  const Vector w = weights_except(layout, factors, party);
  const Index total = layout.total_dim();
  const int d = layout.space().dim(party);
  Matrix rw = Matrix::Zero(total, d);
  for (Index i = 0; i < total; ++i) rw.col(layout.digit(i, party)) += rho.col(i) * w(i);
  Matrix out = Matrix::Zero(d, d);
  for (Index i = 0; i < total; ++i) out.row(layout.digit(i, party)) += std::conj(w(i)) * rw.row(i);
  return 0.5 * (out + out.adjoint());
}

SweepResult sweep_pure(const Vector& psi, const PartyLayout& layout, Factors start, int max_sweeps, double tol) {
  SweepResult r;
  r.factors = std::move(start);
  r.value = std::norm(product_vector(r.factors).dot(psi));
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double value = r.value;
    for (int p = 0; p < layout.parties(); ++p) {
      const Vector v = contract_except(psi, layout, r.factors, p);
      const double n = v.norm();
      if (n > 0.0) {
        r.factors[static_cast<std::size_t>(p)] = v / n;
        value = n * n;
      }
    }
    const double gain = value - r.value;
    r.value = std::max(r.value, value);
    if (gain < tol) {
      r.converged = true;
      break;
    }
  }
  // Recompute from the certificate itself.
  r.value = std::min(1.0, std::norm(product_vector(r.factors).dot(psi)));
  return r;
}

SweepResult sweep_mixed(const Matrix& rho, const PartyLayout& layout, Factors start, int max_sweeps, double tol) {
  SweepResult r;
  r.factors = std::move(start);
  Vector phi = product_vector(r.factors);
  r.value = phi.dot(rho * phi).real();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double value = r.value;
    for (int p = 0; p < layout.parties(); ++p) {
      const Matrix m = contract_operator_except(rho, layout, r.factors, p);
      Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
      const Index top = m.rows() - 1;
      r.factors[static_cast<std::size_t>(p)] = solver.eigenvectors().col(top).normalized();
      value = solver.eigenvalues()(top);
    }
    const double gain = value - r.value;
    r.value = std::max(r.value, value);
    if (gain < tol) {
      r.converged = true;
      break;
    }
  }
  phi = product_vector(r.factors);
  r.value = std::clamp(phi.dot(rho * phi).real(), 0.0, 1.0);
  return r;
}

SweepResult schmidt_top(const Vector& psi, int d0, int d1) {
  // psi_{ab} laid out row-major; psi = sum_k s_k u_k (x) conj(v_k).
  Matrix m(d0, d1);
  for (int a = 0; a < d0; ++a) {
    for (int b = 0; b < d1; ++b) m(a, b) = psi(static_cast<Index>(a) * d1 + b);
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SweepResult r;
  r.factors = {svd.matrixU().col(0).normalized(), svd.matrixV().col(0).conjugate().normalized()};
  r.value = std::min(1.0, std::norm(product_vector(r.factors).dot(psi)));
  r.converged = true;
  return r;
}

}  // namespace gme
