#include "gme/mixed_gm.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <stdexcept>

#include "gme/product_search.hpp"

namespace gme {

Lambda2mResult lambda2_mixed(const DensityMatrix& rho, const OptimizerOptions& opts,
                             const std::vector<ProductState>& warm_starts) {
  const Space& space = rho.space();
  if (space.parties() < 2) throw std::invalid_argument("lambda2_m needs at least two parties");
  const PartyLayout layout(space);
  SweepResult best;
  best.value = -1.0;
  auto consider = [&](Factors start) {
    auto r = sweep_mixed(rho.matrix(), layout, std::move(start), opts.max_sweeps, opts.tol);
    if (r.value > best.value) best = std::move(r);
  };
  for (const auto& w : warm_starts) {
    if (!(w.space() == space)) throw std::invalid_argument("warm start does not match the state space");
    consider(w.factors());
  }
  for (int i = 0; i < opts.restarts; ++i) {
    auto rng = restart_rng(opts.seed, static_cast<std::uint64_t>(i));
    consider(random_factors(space, rng));
  }
  if (best.value < 0.0) throw std::invalid_argument("no starting points requested");
  return {best.value, ProductState(std::move(best.factors)), best.converged};
}

MixedGm gm_mixed(const DensityMatrix& rho, const OptimizerOptions& opts) {
  const double l = lambda2_mixed(rho, opts).lambda2m;
  return {1.0 - l, -std::log2(l)};
}

namespace {

struct TopPair {
  double value;
  Vector vector;
};

TopPair top_of_difference(const Matrix& rho, const Vector& phi) {
  const Matrix m = phi * phi.adjoint() - rho;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const Index top = m.rows() - 1;
  return {std::max(0.0, solver.eigenvalues()(top)), solver.eigenvectors().col(top)};
}

Factors retract(const Factors& f, const Factors& direction, double step) {
  Factors out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = (f[k] - step * direction[k]).normalized();
  return out;
}

struct Descent {
  double value;
  Factors factors;
  bool converged;
};

// Riemannian steepest descent of t(phi) = lambda_max(phi phi^dag - rho) with
// Armijo backtracking on the product of unit spheres.
Descent descend_gt(const Matrix& rho, const PartyLayout& layout, Factors f, int max_iterations, double tol) {
  Vector phi = product_vector(f);
  TopPair cur = top_of_difference(rho, phi);
  double step = 1.0;
  bool converged = false;
  int small_gains = 0;
  // Near a degenerate top eigenvalue the steps zigzag; judge progress over a window instead.
  constexpr int kWindow = 50;
  std::vector<double> history;
  for (int it = 0; it < max_iterations; ++it) {
    history.push_back(cur.value);
    if (it >= kWindow && history[static_cast<std::size_t>(it - kWindow)] - cur.value < 1e-12) {
      converged = true;
      break;
    }
    const Complex overlap = cur.vector.dot(phi);  // u^dag phi
    Factors grad(f.size());
    double g2 = 0.0;
    for (int p = 0; p < layout.parties(); ++p) {
      const auto k = static_cast<std::size_t>(p);
      Vector g = contract_except(cur.vector, layout, f, p) * overlap;
      g -= f[k] * f[k].dot(g);
      g2 += g.squaredNorm();
      grad[k] = std::move(g);
    }
    if (g2 < 1e-24) {
      converged = true;
      break;
    }
    bool moved = false;
    while (step > 1e-14) {
      Factors trial = retract(f, grad, step);
      Vector trial_phi = product_vector(trial);
      TopPair next = top_of_difference(rho, trial_phi);
      if (next.value <= cur.value - 1e-4 * step * g2) {
        const double gain = cur.value - next.value;
        f = std::move(trial);
        phi = std::move(trial_phi);
        cur = std::move(next);
        step = std::min(1e4, step * 2.0);
        moved = true;
        small_gains = gain < tol ? small_gains + 1 : 0;
        if (small_gains >= 3) converged = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      converged = true;
      break;
    }
    if (converged) break;
  }
  return {cur.value * cur.value, std::move(f), converged};
}

}  // namespace

double gt_objective(const DensityMatrix& rho, const ProductState& phi) {
  const double t = top_of_difference(rho.matrix(), phi.vector()).value;
  return t * t;
}

GtResult gt(const DensityMatrix& rho, const OptimizerOptions& opts) {
  const Space& space = rho.space();
  const PartyLayout layout(space);
  const int iterations = std::min(opts.max_sweeps, 5000);

  std::vector<Factors> starts;
  starts.push_back(lambda2_mixed(rho, opts).cps.factors());
  for (int i = 0; i < opts.gt_restarts; ++i) {
    auto rng = restart_rng(opts.seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(i));
    starts.push_back(random_factors(space, rng));
  }

  // Screen every start briefly, then run the warm start and the most promising few to convergence.
  constexpr int kScreen = 200;
  constexpr std::size_t kSurvivors = 4;
  std::vector<Descent> screened;
  for (auto& s : starts) screened.push_back(descend_gt(rho.matrix(), layout, std::move(s), kScreen, opts.tol * 0.1));
  std::vector<std::size_t> order(screened.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin() + 1, order.end(),
                   [&](std::size_t a, std::size_t b) { return screened[a].value < screened[b].value; });
  order.resize(std::min(order.size(), kSurvivors + 1));

  Descent best{2.0, {}, false};
  for (std::size_t i : order) {
    Descent& s = screened[i];
    Descent d = s.converged ? std::move(s) : descend_gt(rho.matrix(), layout, std::move(s.factors), iterations, opts.tol * 0.1);
    if (d.value < best.value) best = std::move(d);
  }
  ProductState cps(std::move(best.factors));
  return {gt_objective(rho, cps), std::move(cps), best.converged};
}

}  // namespace gme
