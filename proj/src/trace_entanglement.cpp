#include "gme/trace_entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "gme/convex_roof.hpp"
#include "gme/mixed_gm.hpp"

namespace gme {

namespace {

// Unitary whose first column is parallel to f.
Matrix completed_basis(const Vector& f) {
  const Matrix column = f;
  Eigen::HouseholderQR<Matrix> qr(column);
  return qr.householderQ() * Matrix::Identity(f.size(), f.size());
}

double squared_trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double t = trace_distance(rho, sigma);
  return t * t;
}

struct Best {
  double value;
  Matrix sigma;
};

// min over t in [0, 1] of D_T^2(rho, (1 - t) sigma + t I/D); the objective is convex in t.
Best mix_with_identity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const Index n = rho.space().total_dim();
  const Matrix id = Matrix::Identity(n, n) / static_cast<double>(n);
  auto at = [&](double t) { return DensityMatrix::normalized(rho.space(), (1.0 - t) * sigma.matrix() + t * id); };
  auto f = [&](double t) { return squared_trace_distance(rho, at(t)); };
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0;
  double b = 1.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 60; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  Best best{f(0.0), sigma.matrix()};
  for (double t : {0.5 * (a + b), 1.0}) {
    const double v = f(t);
    if (v < best.value) best = {v, at(t).matrix()};
  }
  return best;
}

}  // namespace

DensityMatrix dephase_in_product_basis(const DensityMatrix& rho, const ProductState& anchor) {
  Matrix u = completed_basis(anchor.factor(0));
  for (int p = 1; p < anchor.parties(); ++p) u = kron(u, completed_basis(anchor.factor(p)));
  const Matrix inner = u.adjoint() * rho.matrix() * u;
  const Matrix diag = inner.diagonal().real().cast<Complex>().asDiagonal();
  return DensityMatrix::normalized(rho.space(), u * diag * u.adjoint());
}

TraceEntBracket trace_ent_bracket(const DensityMatrix& rho, const OptimizerOptions& opts,
                                  const std::vector<DensityMatrix>& extra_candidates,
                                  const FidelityExtension* fidelity) {
  const Space& space = rho.space();
  std::vector<std::pair<std::string, DensityMatrix>> candidates;

  std::optional<FidelityExtension> own;
  if (fidelity == nullptr) own.emplace(fidelity_extension(rho, opts));
  const FidelityExtension& fid = fidelity != nullptr ? *fidelity : *own;
  candidates.emplace_back("roof product-state mixture", fid.css);
  const auto m = lambda2_mixed(rho, opts);
  candidates.emplace_back("dephasing around the trace-inner-product optimum", dephase_in_product_basis(rho, m.cps));
  const auto t = gt(rho, opts);
  candidates.emplace_back("trace-distance product state", PureState(space, t.cps.vector()).projector());
  candidates.emplace_back("dephasing around the trace-distance optimum", dephase_in_product_basis(rho, t.cps));
  const std::size_t member_limit = std::min<std::size_t>(fid.roof.per_member_cps.size(), 16);
  for (std::size_t i = 0; i < member_limit; ++i) {
    candidates.emplace_back("dephasing around a roof member optimum",
                            dephase_in_product_basis(rho, fid.roof.per_member_cps[i]));
  }
  for (const auto& e : extra_candidates) candidates.emplace_back("supplied candidate", e);

  TraceEntBracket out{0.0, 2.0, DensityMatrix::maximally_mixed(space), "maximally mixed state", true};
  for (const auto& [kind, sigma] : candidates) {
    const Best b = mix_with_identity(rho, sigma);
    if (b.value < out.upper) {
      out.upper = b.value;
      out.witness_upper = DensityMatrix::normalized(space, b.sigma);
      out.witness_kind = kind;
    }
  }
  out.upper = std::min(1.0, out.upper);

  if (rho.is_pure()) {
    const auto eig = hermitian_eigen(rho.matrix());
    const PureState psi = PureState::normalized(space, eig.vectors.col(eig.values.size() - 1));
    const auto l = lambda2_pure(psi, opts);
    const double gap = 1.0 - l.lambda2;
    out.lower = std::min(gap * gap, out.upper);
    out.lower_certified = space.parties() == 2 && opts.exact_bipartite;
  }
  return out;
}

}  // namespace gme
