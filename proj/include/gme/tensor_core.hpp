#pragma once

// Dense multipartite state carriers and the distance/entropy toolkit built on
// top of them.  Everything here is double precision; parties are ordered
// big-endian, i.e. party 0 is the most significant tensor index.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gme {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
/// Eigenvalues at or below this are treated as zero (supports, logs, roots).
inline constexpr double kSupportThreshold = 1e-10;
inline constexpr Index kMaxTotalDim = 4096;

/// Ordered list of local dimensions d_1..d_n of a multipartite Hilbert space.
class Space {
 public:
  explicit Space(std::vector<int> dims);

  [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
  [[nodiscard]] int parties() const { return static_cast<int>(dims_.size()); }
  [[nodiscard]] int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
  [[nodiscard]] Index total_dim() const { return total_; }

  /// Stride of each party in the flattened index.
  [[nodiscard]] std::vector<Index> strides() const;
  /// Space made of the listed parties, in the listed order.
  [[nodiscard]] Space subspace(std::span<const int> parties) const;

  bool operator==(const Space&) const = default;

 private:
  std::vector<int> dims_;
  Index total_ = 1;
};

class DensityMatrix;

class PureState {
 public:
  /// Validates unit norm within kNormTolerance.
  PureState(Space space, Vector amplitudes);
  /// Normalizes the given vector first; throws on a zero vector.
  static PureState normalized(Space space, Vector amplitudes);

  [[nodiscard]] const Space& space() const { return space_; }
  [[nodiscard]] const Vector& amplitudes() const { return amplitudes_; }
  [[nodiscard]] DensityMatrix projector() const;

 private:
  Space space_;
  Vector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates hermiticity, unit trace and positivity.
  DensityMatrix(Space space, Matrix matrix);
  /// Symmetrizes and rescales to unit trace before validating.
  static DensityMatrix normalized(Space space, Matrix matrix);
  static DensityMatrix maximally_mixed(Space space);

  [[nodiscard]] const Space& space() const { return space_; }
  [[nodiscard]] const Matrix& matrix() const { return matrix_; }
  [[nodiscard]] double purity() const;
  [[nodiscard]] bool is_pure(double tolerance = 1e-9) const { return std::abs(purity() - 1.0) <= tolerance; }

 private:
  Space space_;
  Matrix matrix_;
};

/// One unit vector per party.
class ProductState {
 public:
  explicit ProductState(std::vector<Vector> factors);

  [[nodiscard]] const std::vector<Vector>& factors() const { return factors_; }
  [[nodiscard]] const Vector& factor(int party) const { return factors_.at(static_cast<std::size_t>(party)); }
  [[nodiscard]] int parties() const { return static_cast<int>(factors_.size()); }
  [[nodiscard]] Space space() const;
  [[nodiscard]] Vector vector() const;

 private:
  std::vector<Vector> factors_;
};

struct HermitianEigen {
  RealVector values;  // ascending
  Matrix vectors;     // orthonormal columns
};

template <typename Derived>
HermitianEigen hermitian_eigen(const Eigen::MatrixBase<Derived>& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.derived());
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Kronecker product of two dense operands.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                                              a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Clip eigenvalues to [0, 1], zeroing anything at or below kSupportThreshold.
RealVector clip_spectrum(const RealVector& values);
/// Positive square root of a Hermitian PSD matrix (spectrum clipped first).
Matrix psd_sqrt(const Matrix& m);
/// Number of eigenvalues above kSupportThreshold.
int numerical_rank(const Matrix& hermitian);

PureState tensor_assemble(const ProductState& factors);
/// Throws std::invalid_argument if the factor dimensions disagree with `declared`.
PureState tensor_assemble(const ProductState& factors, const Space& declared);

/// Reduced state on `kept` parties (any order; result follows ascending party order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> kept);
/// Partial transpose on the listed parties.
Matrix partial_transpose(const DensityMatrix& rho, std::span<const int> parties);

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Base-2 relative entropy S(rho | sigma); +infinity when supp(rho) is not inside supp(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

struct Entropies {
  double von_neumann = 0.0;
  double linear = 0.0;
};
Entropies entropies(const DensityMatrix& rho);

/// Reorders parties of a flat vector/operator: output party k is input party perm[k].
Vector permute_parties(const Vector& v, const std::vector<int>& dims, const std::vector<int>& perm);
Matrix permute_parties(const Matrix& m, const std::vector<int>& dims, const std::vector<int>& perm);

/// rho (x) sigma regrouped so that party j carries d_j(rho) * d_j(sigma) levels.
DensityMatrix same_space_tensor(const DensityMatrix& rho, const DensityMatrix& sigma);
PureState same_space_tensor(const PureState& psi, const PureState& phi);

}  // namespace gme
