#include "gme/convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gme/mixed_gm.hpp"
#include "gme/product_search.hpp"

namespace gme {

// ---------------------------------------------------------------------------
// Decomposition

Decomposition::Decomposition(std::vector<WeightedState> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("decomposition needs at least one member");
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.p > 0.0)) throw std::invalid_argument("decomposition weights must be positive");
    if (!(m.psi.space() == members_.front().psi.space())) throw std::invalid_argument("members act on different spaces");
    total += m.p;
  }
  if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("decomposition weights do not sum to 1");
}

Matrix Decomposition::mixture() const {
  const Index n = members_.front().psi.space().total_dim();
  Matrix out = Matrix::Zero(n, n);
  for (const auto& m : members_) out += m.p * m.psi.amplitudes() * m.psi.amplitudes().adjoint();
  return out;
}

double Decomposition::reconstruction_error(const DensityMatrix& rho) const {
  return (mixture() - rho.matrix()).cwiseAbs().maxCoeff();
}

double roof_value(const Decomposition& d, const std::vector<double>& lambda2, RoofKind kind) {
  if (lambda2.size() != d.size()) throw std::invalid_argument("one lambda2 per member expected");
  double v = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double l = lambda2[i];
    v += d.members()[i].p * (kind == RoofKind::linear ? 1.0 - l : -std::log2(l));
  }
  return std::max(0.0, v);
}

// ---------------------------------------------------------------------------
// equal-overlap construction

Decomposition equal_overlap_decomposition(const DensityMatrix& rho, const PureState& phi) {
  if (!(rho.space() == phi.space())) throw std::invalid_argument("phi does not match the state space");
  const Vector& f = phi.amplitudes();
  const double g = f.dot(rho.matrix() * f).real();

  const auto eig = hermitian_eigen(rho.matrix());
  std::vector<Vector> pool;
  for (Index k = eig.values.size(); k-- > 0;) {
    if (eig.values(k) > kSupportThreshold) pool.push_back(std::sqrt(eig.values(k)) * eig.vectors.col(k));
  }
  auto overlap = [&](const Vector& w) { return std::norm(f.dot(w)) / w.squaredNorm(); };

  std::vector<WeightedState> members;
  auto emit = [&](const Vector& w) { members.push_back({w.squaredNorm(), PureState::normalized(rho.space(), w)}); };

  while (pool.size() > 1) {
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t k = 1; k < pool.size(); ++k) {
      if (overlap(pool[k]) > overlap(pool[a])) a = k;
      if (overlap(pool[k]) < overlap(pool[b])) b = k;
    }
    if (overlap(pool[a]) - overlap(pool[b]) < 1e-15) break;

    const Vector wa = pool[a];
    const Vector wb = pool[b];
    const double delta = std::arg(f.dot(wa)) - std::arg(f.dot(wb));
    const Complex phase = std::polar(1.0, delta);
    auto rotated = [&](double theta) -> Vector { return std::cos(theta / 2) * wa + std::sin(theta / 2) * phase * wb; };

    // overlap(rotated(0)) >= g > overlap(rotated(pi))
    double lo = 0.0;
    double hi = std::numbers::pi;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (overlap(rotated(mid)) >= g) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double theta = 0.5 * (lo + hi);
    emit(rotated(theta));
    const Vector rest = -std::sin(theta / 2) * std::conj(phase) * wa + std::cos(theta / 2) * wb;
    pool[a] = rest;
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(b));
  }
  for (const auto& w : pool) emit(w);

  double total = 0.0;
  for (const auto& m : members) total += m.p;
  for (auto& m : members) m.p /= total;
  return Decomposition(std::move(members));
}

// ---------------------------------------------------------------------------
// roof search

namespace {

constexpr double kNegligibleWeight = 1e-14;

struct Problem {
  Space space;
  PartyLayout layout;
  bool bipartite;
  Matrix a;  // V_r diag(sqrt(lambda_r)), members are a * c
  RealVector lambda;
  RoofKind kind;
  const OptimizerOptions& opts;
};

struct Member {
  double p = 0.0;
  double lambda2 = 1.0;
  Factors factors;
  Vector b;        // a^dag phi
  Complex bc{};    // b^dag c
};

struct Evaluation {
  double value = 0.0;
  std::vector<Member> members;
};

// Best product state of one normalized member.  `warm` may be empty.
SweepResult member_cps(const Problem& pr, const Vector& psi, const Factors& warm, int restarts, std::uint64_t stream) {
  if (pr.bipartite) return schmidt_top(psi, pr.space.dim(0), pr.space.dim(1));
  SweepResult best;
  best.value = -1.0;
  if (!warm.empty()) best = sweep_pure(psi, pr.layout, warm, pr.opts.max_sweeps, pr.opts.tol);
  for (int i = 0; i < restarts; ++i) {
    auto rng = restart_rng(pr.opts.seed + 0x51ed270b27aULL * (stream + 1), static_cast<std::uint64_t>(i));
    auto r = sweep_pure(psi, pr.layout, random_factors(pr.space, rng), pr.opts.max_sweeps, pr.opts.tol);
    if (r.value > best.value) best = std::move(r);
  }
  return best;
}

Evaluation evaluate(const Problem& pr, const Matrix& u, const std::vector<Factors>& warm, int restarts) {
  Evaluation ev;
  ev.members.resize(static_cast<std::size_t>(u.rows()));
  for (Index i = 0; i < u.rows(); ++i) {
    auto& m = ev.members[static_cast<std::size_t>(i)];
    const Vector c = u.row(i).transpose();
    const Vector w = pr.a * c;
    m.p = w.squaredNorm();
    if (m.p < kNegligibleWeight) continue;
    const Factors none;
    const Factors& start = static_cast<std::size_t>(i) < warm.size() ? warm[static_cast<std::size_t>(i)] : none;
    auto r = member_cps(pr, w / std::sqrt(m.p), start, start.empty() ? std::max(1, restarts) : restarts,
                        static_cast<std::uint64_t>(i));
    m.lambda2 = std::max(r.value, 1e-300);
    m.factors = std::move(r.factors);
    m.b = pr.a.adjoint() * product_vector(m.factors);
    m.bc = m.b.dot(c);
    ev.value += pr.kind == RoofKind::linear ? m.p * (1.0 - m.lambda2) : -m.p * std::log2(m.lambda2);
  }
  return ev;
}

Matrix euclidean_gradient(const Problem& pr, const Matrix& u, const Evaluation& ev) {
  Matrix g = Matrix::Zero(u.rows(), u.cols());
  for (Index i = 0; i < u.rows(); ++i) {
    const auto& m = ev.members[static_cast<std::size_t>(i)];
    if (m.p < kNegligibleWeight) continue;
    const Vector c = u.row(i).transpose();
    const Vector lc = pr.lambda.cast<Complex>().cwiseProduct(c);
    Vector row;
    if (pr.kind == RoofKind::linear) {
      row = lc - m.bc * m.b;
    } else {
      const double s = m.p * m.lambda2;
      row = ((std::log(m.p / s) + 1.0) * lc - (m.p / s) * m.bc * m.b) / std::numbers::ln2;
    }
    g.row(i) = row.transpose();
  }
  return g;
}

Matrix polar_factor(const Matrix& x) {
  // x (x^dag x)^{-1/2} through the small Gram matrix; SVD only when x is close to rank deficient.
  Eigen::SelfAdjointEigenSolver<Matrix> gram(x.adjoint() * x);
  const RealVector& s = gram.eigenvalues();
  if (s(0) > 1e-8 * s(s.size() - 1)) {
    const Matrix& v = gram.eigenvectors();
    return x * (v * s.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint());
  }
  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

std::vector<Factors> factors_of(const Evaluation& ev) {
  std::vector<Factors> out;
  out.reserve(ev.members.size());
  for (const auto& m : ev.members) out.push_back(m.factors);
  return out;
}

struct Candidate {
  double value;
  Matrix u;
  std::vector<Factors> factors;
  bool converged;
};

Matrix tangent(const Matrix& u, const Matrix& x) {
  const Matrix ux = u.adjoint() * x;
  return x - u * (0.5 * (ux + ux.adjoint()));
}

// Riemannian conjugate gradient (Polak-Ribiere, projection transport) on the
// Stiefel manifold with Armijo backtracking and polar retraction.
Candidate descend(const Problem& pr, Matrix u, const std::vector<Factors>& warm) {
  Evaluation ev = evaluate(pr, u, warm, pr.opts.roof_inner_restarts);
  Matrix r = tangent(u, euclidean_gradient(pr, u, ev));
  Matrix dir = -r;
  double step = 1.0;
  bool converged = false;
  int stalls = 0;
  for (int it = 0; it < pr.opts.roof_iterations; ++it) {
    const double r2 = r.squaredNorm();
    if (r2 < 1e-24) {
      converged = true;
      break;
    }
    double slope = -(r.array() * dir.array().conjugate()).real().sum();
    if (slope <= 0.0) {
      dir = -r;
      slope = r2;
    }
    const auto warm_now = factors_of(ev);
    bool moved = false;
    double gain = 0.0;
    while (step > 1e-14) {
      Matrix trial = polar_factor(u + step * dir);
      Evaluation next = evaluate(pr, trial, warm_now, 0);
      if (next.value <= ev.value - 1e-4 * step * slope) {
        gain = ev.value - next.value;
        u = std::move(trial);
        ev = std::move(next);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      if (dir.isApprox(-r)) {
        converged = true;
        break;
      }
      dir = -r;  // restart along the gradient
      step = 1.0;
      continue;
    }
    step = std::min(16.0, step * 2.0);
    stalls = gain < 1e-15 ? stalls + 1 : 0;
    if (stalls >= 3) {
      converged = true;
      break;
    }
    const Matrix r_new = tangent(u, euclidean_gradient(pr, u, ev));
    const Matrix r_old = tangent(u, r);
    const double beta = std::max(0.0, (r_new.array() * (r_new - r_old).array().conjugate()).real().sum() / r2);
    dir = -r_new + beta * tangent(u, dir);
    r = r_new;
  }
  return {ev.value, std::move(u), factors_of(ev), converged};
}

// Mixing matrix reproducing a given decomposition of rho.
Matrix mixing_of(const Decomposition& d, const Matrix& v_r, const RealVector& lambda) {
  Matrix u(static_cast<Index>(d.size()), lambda.size());
  const RealVector inv = lambda.cwiseSqrt().cwiseInverse();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& m = d.members()[i];
    const Vector c = inv.cast<Complex>().cwiseProduct(v_r.adjoint() * (std::sqrt(m.p) * m.psi.amplitudes()));
    u.row(static_cast<Index>(i)) = c.transpose();
  }
  return polar_factor(u);
}

}  // namespace

RoofResult convex_roof(const DensityMatrix& rho, RoofKind kind, const OptimizerOptions& opts) {
  const Space& space = rho.space();
  if (space.parties() < 2) throw std::invalid_argument("convex roof needs at least two parties");

  std::vector<std::string> warnings;
  const auto eig = hermitian_eigen(rho.matrix());
  std::vector<Index> support;
  for (Index k = eig.values.size(); k-- > 0;) {
    const double v = eig.values(k);
    if (v > kSupportThreshold) support.push_back(k);
    if (v > 0.1 * kSupportThreshold && v < 10.0 * kSupportThreshold) {
      warnings.emplace_back("eigenvalue " + std::to_string(v) + " is close to the rank threshold");
    }
  }
  const auto r = static_cast<Index>(support.size());
  Matrix v_r(space.total_dim(), r);
  RealVector lambda(r);
  for (Index j = 0; j < r; ++j) {
    v_r.col(j) = eig.vectors.col(support[static_cast<std::size_t>(j)]);
    lambda(j) = eig.values(support[static_cast<std::size_t>(j)]);
  }

  Problem pr{space, PartyLayout(space), space.parties() == 2 && opts.exact_bipartite,
             v_r * lambda.cwiseSqrt().asDiagonal(), lambda, kind, opts};

  std::vector<Candidate> found;
  if (r == 1) {
    found.push_back({0.0, Matrix::Identity(1, 1), {}, true});
  } else {
    const auto m = lambda2_mixed(rho, opts);
    const Decomposition eq = equal_overlap_decomposition(rho, PureState(space, m.cps.vector()));
    const std::vector<Factors> warm_m(eq.size(), m.cps.factors());
    found.push_back(descend(pr, mixing_of(eq, v_r, lambda), warm_m));
    found.push_back(descend(pr, Matrix::Identity(r, r), std::vector<Factors>(static_cast<std::size_t>(r), m.cps.factors())));

    std::vector<Index> sizes{r, 2 * r, std::min(r * r, std::max<Index>(2 * r, 256))};
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::uint64_t stream = 0;
    for (Index k : sizes) {
      for (int i = 0; i < opts.roof_restarts; ++i) {
        auto rng = restart_rng(opts.seed ^ 0xc0ffee123ULL, stream++);
        found.push_back(descend(pr, random_isometry(k, r, rng), {}));
      }
    }
  }
  // Lowest value wins; earlier candidates win ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < found.size(); ++i) {
    if (found[i].value < found[best].value) best = i;
  }
  const Candidate& c = found[best];

  // Certification: rebuild members and recompute every lambda2 with full restarts.
  std::vector<WeightedState> members;
  std::vector<double> lambda2s;
  std::vector<ProductState> cpss;
  OptimizerOptions final_opts = opts;
  final_opts.restarts = opts.roof_final_restarts;
  for (Index i = 0; i < c.u.rows(); ++i) {
    const Vector w = pr.a * c.u.row(i).transpose();
    const double p = w.squaredNorm();
    if (p < kNegligibleWeight) continue;
    PureState psi = PureState::normalized(space, w);
    std::vector<ProductState> warm;
    if (static_cast<std::size_t>(i) < c.factors.size() && !c.factors[static_cast<std::size_t>(i)].empty()) {
      warm.emplace_back(c.factors[static_cast<std::size_t>(i)]);
    }
    final_opts.seed = opts.seed + static_cast<std::uint64_t>(i);
    auto cps = lambda2_pure(psi, final_opts, warm);
    members.push_back({p, std::move(psi)});
    lambda2s.push_back(cps.lambda2);
    cpss.push_back(std::move(cps.cps));
  }
  double total = 0.0;
  for (const auto& mbr : members) total += mbr.p;
  for (auto& mbr : members) mbr.p /= total;
  Decomposition d(std::move(members));
  const double value = roof_value(d, lambda2s, kind);
  return {value, std::move(d), std::move(lambda2s), std::move(cpss), c.converged, std::move(warnings)};
}

FidelityExtension fidelity_extension(const DensityMatrix& rho, const OptimizerOptions& opts) {
  RoofResult roof = convex_roof(rho, RoofKind::linear, opts);
  const Index n = rho.space().total_dim();
  Matrix css = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < roof.decomposition.size(); ++i) {
    const Vector phi = roof.per_member_cps[i].vector();
    css += roof.decomposition.members()[i].p * phi * phi.adjoint();
  }
  DensityMatrix css_state = DensityMatrix::normalized(rho.space(), css);
  const double g = roof.value;
  const double l = 1.0 - g;
  const double fid = fidelity(rho, css_state);
  return {g, -std::log2(l), l, std::move(css_state), fid, std::move(roof)};
}

}  // namespace gme
