#include "gme/families.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gme/appendix.hpp"
#include "gme/product_search.hpp"

namespace gme {

PureState make_mes(int d) {
  if (d < 2) throw std::invalid_argument("MES needs d >= 2");
  Vector v = Vector::Zero(static_cast<Index>(d) * d);
  for (int i = 0; i < d; ++i) v(static_cast<Index>(i) * d + i) = 1.0;
  return PureState::normalized(Space({d, d}), v);
}

PureState make_ghz(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("GHZ needs n >= 2 and d >= 2");
  const Space space(std::vector<int>(static_cast<std::size_t>(n), d));
  Vector v = Vector::Zero(space.total_dim());
  // |i...i> sits at i * (1 + d + d^2 + ...)
  Index unit = 0;
  for (int k = 0; k < n; ++k) unit = unit * d + 1;
  for (int i = 0; i < d; ++i) v(i * unit) = 1.0;
  return PureState::normalized(space, v);
}

PureState make_dicke(int n, int k) {
  if (n < 2 || k < 0 || k > n) throw std::invalid_argument("Dicke needs n >= 2 and 0 <= k <= n");
  const Space space(std::vector<int>(static_cast<std::size_t>(n), 2));
  Vector v = Vector::Zero(space.total_dim());
  for (Index i = 0; i < space.total_dim(); ++i) {
    if (std::popcount(static_cast<std::uint64_t>(i)) == k) v(i) = 1.0;
  }
  return PureState::normalized(space, v);
}

PureState make_w(int n) { return make_dicke(n, 1); }

PureState random_pure(const Space& space, std::mt19937_64& rng) {
  return PureState::normalized(space, random_unit_vector(space.total_dim(), rng));
}

DensityMatrix random_mixed(const Space& space, std::mt19937_64& rng, int rank) {
  const Index n = space.total_dim();
  const Index cols = rank > 0 ? rank : n;
  std::normal_distribution<double> normal;
  Matrix g(n, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return DensityMatrix::normalized(space, g * g.adjoint());
}

// ---------------------------------------------------------------------------
// isotropic

IsotropicSpec::IsotropicSpec(int d, double f) : d_(d), f_(f) {
  if (d < 2) throw std::invalid_argument("isotropic state needs d >= 2");
  if (f < -1e-12 || f > 1.0 + 1e-12) throw std::invalid_argument("F must lie in [0, 1]");
  f_ = std::clamp(f, 0.0, 1.0);
}

IsotropicSpec IsotropicSpec::from_p(int d, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  const double d2 = static_cast<double>(d) * d;
  return IsotropicSpec(d, 1.0 - p * (d2 - 1.0) / d2);
}

IsotropicSpec IsotropicSpec::from_f(int d, double f) {
  const double d2 = static_cast<double>(d) * d;
  if (f < 1.0 / d2 - 1e-12) throw std::invalid_argument("F below 1/d^2 is not an isotropic state of this family");
  return IsotropicSpec(d, f);
}

double IsotropicSpec::p() const {
  const double d2 = static_cast<double>(d_) * d_;
  return d2 / (d2 - 1.0) * (1.0 - f_);
}

DensityMatrix make_isotropic(const IsotropicSpec& spec) {
  const int d = spec.d();
  const Index n = static_cast<Index>(d) * d;
  const Vector psi = make_mes(d).amplitudes();
  const double p = spec.p();
  Matrix m = p / static_cast<double>(n) * Matrix::Identity(n, n) + (1.0 - p) * psi * psi.adjoint();
  return DensityMatrix::normalized(Space({d, d}), m);
}

IsotropicClosedForms iso_closed_forms(const IsotropicSpec& spec) {
  const double d = spec.d();
  const double f = spec.f();
  const double p = spec.p();
  IsotropicClosedForms c;
  c.separable = f <= 1.0 / d + 1e-15;
  c.lambda2m = p / (d * d) + (1.0 - p) / d;
  c.g_m = 1.0 - c.lambda2m;
  c.g_m_log = -std::log2(c.lambda2m);
  if (!c.separable) {
    const double root = std::sqrt(f) + std::sqrt((d - 1.0) * (1.0 - f));
    const double lambda2f = root * root / d;
    c.g_fc = std::max(0.0, 1.0 - lambda2f);
    c.g_fc_log = std::max(0.0, -std::log2(lambda2f));
  }
  c.gt = gt_isotropic_closed(spec.d(), std::clamp(p, 0.0, 1.0));
  return c;
}

// ---------------------------------------------------------------------------
// maximally correlated

void MaxCorrSpec::validate() const {
  if (d < 2) throw std::invalid_argument("maximally correlated state needs d >= 2");
  if (partition.size() < 2 || partition.front() != 0 || partition.back() != d) {
    throw std::invalid_argument("partition must run from 0 to d");
  }
  for (std::size_t i = 1; i < partition.size(); ++i) {
    if (partition[i] <= partition[i - 1]) throw std::invalid_argument("partition must be strictly increasing");
  }
  if (weights.size() + 1 != partition.size()) throw std::invalid_argument("one weight per block expected");
  for (double q : weights) {
    if (!(q > 0.0 && q < 1.0) && weights.size() > 1) throw std::invalid_argument("weights must lie in (0, 1)");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1");
}

MaxCorrSpec MaxCorrSpec::rank2(int m, int n, double q) {
  MaxCorrSpec s{m + n, {0, m, m + n}, {q, 1.0 - q}};
  s.validate();
  return s;
}

PureState maxcorr_theta(const MaxCorrSpec& spec, int i) {
  const int d = spec.d;
  Vector v = Vector::Zero(static_cast<Index>(d) * d);
  const int lo = spec.partition.at(static_cast<std::size_t>(i));
  const int hi = spec.partition.at(static_cast<std::size_t>(i) + 1);
  for (int k = lo; k < hi; ++k) v(static_cast<Index>(k) * d + k) = 1.0;
  return PureState::normalized(Space({d, d}), v);
}

DensityMatrix make_maxcorr(const MaxCorrSpec& spec) {
  spec.validate();
  const Index n = static_cast<Index>(spec.d) * spec.d;
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < spec.rank(); ++i) {
    const Vector t = maxcorr_theta(spec, i).amplitudes();
    m += spec.weights[static_cast<std::size_t>(i)] * t * t.adjoint();
  }
  return DensityMatrix::normalized(Space({spec.d, spec.d}), m);
}

Rank2LogRoof rank2_log_roof(int m, int n, double q) {
  const auto r = fhs_minimum(FhsSpec{m, n, q});
  return {r.value, r.regime, r.h};
}

MaxCorrClosedForms maxcorr_closed_forms(const MaxCorrSpec& spec) {
  spec.validate();
  MaxCorrClosedForms c;
  double sum = 0.0;
  double top = 0.0;
  for (int i = 0; i < spec.rank(); ++i) {
    const double ratio = spec.weights[static_cast<std::size_t>(i)] / spec.block(i);
    sum += ratio;
    top = std::max(top, ratio);
  }
  c.g_c = 1.0 - sum;
  c.g_f_log = -std::log2(sum);
  c.lambda2m = top;
  c.g_m = 1.0 - top;
  c.g_m_log = -std::log2(top);

  bool equal_blocks = true;
  for (int i = 1; i < spec.rank(); ++i) equal_blocks = equal_blocks && spec.block(i) == spec.block(0);

  if (spec.rank() == 1) {
    c.g_c_log = c.g_f_log;
    c.g_c_log_source = "closed form";
  } else if (spec.rank() == 2) {
    // Small block first.
    const bool swap = spec.block(0) > spec.block(1);
    const int small = swap ? 1 : 0;
    const int large = 1 - small;
    const double q = spec.weights[static_cast<std::size_t>(small)];
    const auto r = rank2_log_roof(spec.block(small), spec.block(large), q);
    c.g_c_log = r.value;
    c.regime = r.regime;
    c.g_c_log_source = "closed form";

    const PureState ts = maxcorr_theta(spec, small);
    const PureState tl = maxcorr_theta(spec, large);
    const Space& space = ts.space();
    std::vector<WeightedState> members;
    if (r.h > 0.0) {
      const double w = q * (1.0 + r.h) / 2.0;
      members.push_back({w, PureState::normalized(space, ts.amplitudes() + std::sqrt(r.h) * tl.amplitudes())});
      members.push_back({w, PureState::normalized(space, ts.amplitudes() - std::sqrt(r.h) * tl.amplitudes())});
    } else {
      members.push_back({q, ts});
    }
    const double rest = (1.0 - q) - q * r.h;
    if (rest > 1e-15) members.push_back({rest, tl});
    double total = 0.0;
    for (const auto& mbr : members) total += mbr.p;
    for (auto& mbr : members) mbr.p /= total;
    c.log_decomposition = Decomposition(std::move(members));
  } else if (equal_blocks) {
    c.g_c_log = c.g_f_log;
    c.g_c_log_source = "equal blocks";
  } else {
    c.g_c_log_source = "optimizer only";
  }
  return c;
}

// ---------------------------------------------------------------------------
// two qubits

TwoQubitClosedForms two_qubit_closed_forms(const DensityMatrix& rho) {
  if (!(rho.space() == Space({2, 2}))) throw std::invalid_argument("two-qubit state expected");
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix flipped = yy * rho.matrix().conjugate() * yy;
  // rho * flipped has the same spectrum as sqrt(rho) flipped sqrt(rho).
  const Matrix s = psd_sqrt(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(s * flipped * s, Eigen::EigenvaluesOnly);
  RealVector ev = solver.eigenvalues();
  std::vector<double> roots;
  for (Index i = 0; i < ev.size(); ++i) roots.push_back(ev(i) < 1e-12 ? 0.0 : std::sqrt(ev(i)));
  std::sort(roots.rbegin(), roots.rend());
  TwoQubitClosedForms out;
  out.concurrence = std::clamp(roots[0] - roots[1] - roots[2] - roots[3], 0.0, 1.0);
  const double lambda2 = (1.0 + std::sqrt(1.0 - out.concurrence * out.concurrence)) / 2.0;
  out.g_c_log = -std::log2(lambda2);
  out.g_c = 1.0 - lambda2;
  return out;
}

}  // namespace gme
