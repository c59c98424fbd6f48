#include "gme/pure_gm.hpp"

#include <cmath>
#include <stdexcept>

#include "gme/product_search.hpp"

namespace gme {

CpsResult lambda2_pure(const PureState& psi, const OptimizerOptions& opts, const std::vector<ProductState>& warm_starts) {
  const Space& space = psi.space();
  if (space.parties() < 2) throw std::invalid_argument("lambda2 needs at least two parties");

  if (space.parties() == 2 && opts.exact_bipartite) {
    auto top = schmidt_top(psi.amplitudes(), space.dim(0), space.dim(1));
    return {top.value, ProductState(std::move(top.factors)), 0, true};
  }

  const PartyLayout layout(space);
  SweepResult best;
  best.value = -1.0;
  int used = 0;
  auto consider = [&](Factors start) {
    auto r = sweep_pure(psi.amplitudes(), layout, std::move(start), opts.max_sweeps, opts.tol);
    ++used;
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
  return {best.value, ProductState(std::move(best.factors)), used, best.converged};
}

PureGm gm_from_lambda2(double lambda2) {
  if (!(lambda2 > 0.0)) throw std::invalid_argument("lambda2 must be positive");
  return {1.0 - lambda2, -std::log2(lambda2)};
}

PureGm gm_pure(const PureState& psi, const OptimizerOptions& opts) { return gm_from_lambda2(lambda2_pure(psi, opts).lambda2); }

}  // namespace gme
