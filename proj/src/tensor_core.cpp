#include "gme/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gme {
namespace {

std::vector<int> digits_of(Index index, const std::vector<int>& dims) {
  std::vector<int> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = static_cast<int>(index % dims[k]);
    index /= dims[k];
  }
  return digits;
}

Index index_of(const std::vector<int>& digits, const std::vector<int>& dims) {
  Index index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

void require_same_space(const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("states act on different spaces");
}

}  // namespace

// ---------------------------------------------------------------------------
// Space

Space::Space(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("space needs at least one party");
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("local dimensions must be >= 2");
    total_ *= d;
    if (total_ > kMaxTotalDim) throw std::length_error("total dimension exceeds " + std::to_string(kMaxTotalDim));
  }
}

std::vector<Index> Space::strides() const {
  std::vector<Index> s(dims_.size(), 1);
  for (std::size_t k = dims_.size(); k-- > 1;) s[k - 1] = s[k] * dims_[k];
  return s;
}

Space Space::subspace(std::span<const int> parties) const {
  std::vector<int> d;
  d.reserve(parties.size());
  for (int p : parties) d.push_back(dim(p));
  return Space(std::move(d));
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(Space space, Vector amplitudes) : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.total_dim()) throw std::invalid_argument("amplitude count does not match space");
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) throw std::invalid_argument("pure state is not normalized");
}

PureState PureState::normalized(Space space, Vector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
  amplitudes /= n;
  return PureState(std::move(space), std::move(amplitudes));
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(space_, amplitudes_ * amplitudes_.adjoint());
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Space space, Matrix matrix) : space_(std::move(space)), matrix_(std::move(matrix)) {
  const Index n = space_.total_dim();
  if (matrix_.rows() != n || matrix_.cols() != n) throw std::invalid_argument("density matrix does not match space");
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  matrix_ = (0.5 * (matrix_ + matrix_.adjoint())).eval();
  if (std::abs(matrix_.trace().real() - 1.0) > kTraceTolerance) throw std::invalid_argument("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdTolerance) throw std::invalid_argument("density matrix is not PSD");
}

DensityMatrix DensityMatrix::normalized(Space space, Matrix matrix) {
  matrix = (0.5 * (matrix + matrix.adjoint())).eval();
  const double tr = matrix.trace().real();
  if (!(tr > 0.0)) throw std::invalid_argument("cannot normalize a traceless operator");
  matrix /= tr;
  return DensityMatrix(std::move(space), std::move(matrix));
}

DensityMatrix DensityMatrix::maximally_mixed(Space space) {
  const Index n = space.total_dim();
  return DensityMatrix(std::move(space), Matrix::Identity(n, n) / static_cast<double>(n));
}

double DensityMatrix::purity() const { return matrix_.cwiseAbs2().sum(); }

// ---------------------------------------------------------------------------
// ProductState

ProductState::ProductState(std::vector<Vector> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("product state needs at least one factor");
  for (const auto& f : factors_) {
    if (f.size() < 2) throw std::invalid_argument("factor dimension must be >= 2");
    if (std::abs(f.norm() - 1.0) > kNormTolerance) throw std::invalid_argument("product factor is not normalized");
  }
}

Space ProductState::space() const {
  std::vector<int> dims;
  dims.reserve(factors_.size());
  for (const auto& f : factors_) dims.push_back(static_cast<int>(f.size()));
  return Space(std::move(dims));
}

Vector ProductState::vector() const {
  Vector out = factors_.front();
  for (std::size_t k = 1; k < factors_.size(); ++k) out = kron(out, factors_[k]);
  return out;
}

// ---------------------------------------------------------------------------
// helpers

RealVector clip_spectrum(const RealVector& values) {
  return values.unaryExpr([](double v) { return v <= kSupportThreshold ? 0.0 : std::min(v, 1.0); });
}

Matrix psd_sqrt(const Matrix& m) {
  const auto eig = hermitian_eigen(m);
  const RealVector roots = eig.values.unaryExpr([](double v) { return v <= kSupportThreshold ? 0.0 : std::sqrt(v); });
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

int numerical_rank(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return static_cast<int>((solver.eigenvalues().array() > kSupportThreshold).count());
}

// ---------------------------------------------------------------------------
// operations

PureState tensor_assemble(const ProductState& factors) { return PureState(factors.space(), factors.vector()); }

PureState tensor_assemble(const ProductState& factors, const Space& declared) {
  if (!(factors.space() == declared)) throw std::invalid_argument("product factors do not match the declared space");
  return tensor_assemble(factors);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> kept) {
  const auto& dims = rho.space().dims();
  const int n = rho.space().parties();
  if (kept.empty()) throw std::invalid_argument("partial trace needs a nonempty kept set");
  std::vector<bool> keep(static_cast<std::size_t>(n), false);
  for (int p : kept) {
    if (p < 0 || p >= n) throw std::invalid_argument("party index out of range");
    keep[static_cast<std::size_t>(p)] = true;
  }
  std::vector<int> kept_dims;
  std::vector<int> traced_dims;
  std::vector<int> kept_parties;
  for (int p = 0; p < n; ++p) {
    if (keep[static_cast<std::size_t>(p)]) {
      kept_dims.push_back(dims[static_cast<std::size_t>(p)]);
      kept_parties.push_back(p);
    } else {
      traced_dims.push_back(dims[static_cast<std::size_t>(p)]);
    }
  }
  const Index total = rho.space().total_dim();
  const Index kept_total = std::accumulate(kept_dims.begin(), kept_dims.end(), Index{1}, std::multiplies<>());
  const Index traced_total = total / kept_total;

  // Bucket every flat index by its traced-out multi-index.
  std::vector<std::vector<std::pair<Index, Index>>> buckets(static_cast<std::size_t>(traced_total));
  for (Index i = 0; i < total; ++i) {
    const auto digits = digits_of(i, dims);
    Index k = 0;
    Index t = 0;
    for (int p = 0; p < n; ++p) {
      if (keep[static_cast<std::size_t>(p)]) {
        k = k * dims[static_cast<std::size_t>(p)] + digits[static_cast<std::size_t>(p)];
      } else {
        t = t * dims[static_cast<std::size_t>(p)] + digits[static_cast<std::size_t>(p)];
      }
    }
    buckets[static_cast<std::size_t>(t)].emplace_back(i, k);
  }
  Matrix out = Matrix::Zero(kept_total, kept_total);
  const Matrix& m = rho.matrix();
  for (const auto& bucket : buckets) {
    for (const auto& [ia, ka] : bucket) {
      for (const auto& [ib, kb] : bucket) out(ka, kb) += m(ia, ib);
    }
  }
  return DensityMatrix::normalized(Space(kept_dims), std::move(out));
}

Matrix partial_transpose(const DensityMatrix& rho, std::span<const int> parties) {
  const auto& dims = rho.space().dims();
  const Index total = rho.space().total_dim();
  std::vector<bool> flip(dims.size(), false);
  for (int p : parties) flip.at(static_cast<std::size_t>(p)) = true;
  Matrix out(total, total);
  for (Index i = 0; i < total; ++i) {
    const auto di = digits_of(i, dims);
    for (Index j = 0; j < total; ++j) {
      auto a = di;
      auto b = digits_of(j, dims);
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (flip[k]) std::swap(a[k], b[k]);
      }
      out(index_of(a, dims), index_of(b, dims)) = rho.matrix()(i, j);
    }
  }
  return out;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_space(rho, sigma);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix() - sigma.matrix(), Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_space(rho, sigma);
  // Tr sqrt(sqrt(rho) sigma sqrt(rho)) equals the trace norm of sqrt(rho) sqrt(sigma).
  const Matrix product = psd_sqrt(rho.matrix()) * psd_sqrt(sigma.matrix());
  Eigen::JacobiSVD<Matrix> svd(product);
  return std::clamp(svd.singularValues().sum(), 0.0, 1.0);
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * fidelity(rho, sigma)));
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_space(rho, sigma);
  const auto er = hermitian_eigen(rho.matrix());
  const auto es = hermitian_eigen(sigma.matrix());
  const RealVector a = clip_spectrum(er.values);
  const RealVector b = clip_spectrum(es.values);
  // |<a_i|b_j>|^2
  const Eigen::MatrixXd overlap = (er.vectors.adjoint() * es.vectors).cwiseAbs2();

  double leak = 0.0;
  double cross = 0.0;
  double self = 0.0;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) == 0.0) continue;
    self += a(i) * std::log2(a(i));
    for (Index j = 0; j < b.size(); ++j) {
      if (b(j) == 0.0) {
        leak += a(i) * overlap(i, j);
      } else {
        cross += a(i) * overlap(i, j) * std::log2(b(j));
      }
    }
  }
  if (leak > kSupportThreshold) return std::numeric_limits<double>::infinity();
  return std::max(0.0, self - cross);
}

Entropies entropies(const DensityMatrix& rho) {
  const RealVector values = clip_spectrum(hermitian_eigen(rho.matrix()).values);
  Entropies e;
  double squares = 0.0;
  for (Index i = 0; i < values.size(); ++i) {
    const double v = values(i);
    squares += v * v;
    if (v > 0.0) e.von_neumann -= v * std::log2(v);
  }
  e.linear = std::max(0.0, 1.0 - squares);
  e.von_neumann = std::max(0.0, e.von_neumann);
  return e;
}

Vector permute_parties(const Vector& v, const std::vector<int>& dims, const std::vector<int>& perm) {
  std::vector<int> out_dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims.at(static_cast<std::size_t>(perm[k]));
  Vector out(v.size());
  std::vector<int> od(perm.size());
  for (Index i = 0; i < v.size(); ++i) {
    const auto d = digits_of(i, dims);
    for (std::size_t k = 0; k < perm.size(); ++k) od[k] = d[static_cast<std::size_t>(perm[k])];
    out(index_of(od, out_dims)) = v(i);
  }
  return out;
}

Matrix permute_parties(const Matrix& m, const std::vector<int>& dims, const std::vector<int>& perm) {
  std::vector<int> out_dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims.at(static_cast<std::size_t>(perm[k]));
  const Index n = m.rows();
  std::vector<Index> map(static_cast<std::size_t>(n));
  std::vector<int> od(perm.size());
  for (Index i = 0; i < n; ++i) {
    const auto d = digits_of(i, dims);
    for (std::size_t k = 0; k < perm.size(); ++k) od[k] = d[static_cast<std::size_t>(perm[k])];
    map[static_cast<std::size_t>(i)] = index_of(od, out_dims);
  }
  Matrix out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) = m(i, j);
  }
  return out;
}

namespace {

struct Interleave {
  std::vector<int> joint_dims;
  std::vector<int> perm;
  std::vector<int> grouped_dims;
};

Interleave interleave(const Space& a, const Space& b) {
  if (a.parties() != b.parties()) throw std::invalid_argument("same-space tensor needs equal party counts");
  const int n = a.parties();
  Interleave out;
  out.joint_dims = a.dims();
  out.joint_dims.insert(out.joint_dims.end(), b.dims().begin(), b.dims().end());
  for (int j = 0; j < n; ++j) {
    out.perm.push_back(j);
    out.perm.push_back(n + j);
    out.grouped_dims.push_back(a.dim(j) * b.dim(j));
  }
  return out;
}

}  // namespace

DensityMatrix same_space_tensor(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const auto layout = interleave(rho.space(), sigma.space());
  Matrix joint = kron(rho.matrix(), sigma.matrix());
  return DensityMatrix::normalized(Space(layout.grouped_dims), permute_parties(joint, layout.joint_dims, layout.perm));
}

PureState same_space_tensor(const PureState& psi, const PureState& phi) {
  const auto layout = interleave(psi.space(), phi.space());
  Vector joint = kron(psi.amplitudes(), phi.amplitudes());
  return PureState::normalized(Space(layout.grouped_dims), permute_parties(joint, layout.joint_dims, layout.perm));
}

}  // namespace gme
