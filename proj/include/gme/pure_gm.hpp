#pragma once

#include <cstdint>
#include <vector>

#include "gme/tensor_core.hpp"

namespace gme {

struct OptimizerOptions {
  int restarts = 32;
  int max_sweeps = 10000;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  /// Use the singular value decomposition for two-party pure inputs.
  bool exact_bipartite = true;
  /// Starts for the trace-distance product-state search.
  int gt_restarts = 64;
  /// Random mixing-matrix starts per member count in the convex-roof search.
  int roof_restarts = 4;
  /// Descent iterations per convex-roof start.
  int roof_iterations = 400;
  /// Restarts of the inner product-state search while the roof is being optimized / certified.
  int roof_inner_restarts = 8;
  int roof_final_restarts = 32;
};

struct CpsResult {
  double lambda2 = 0.0;
  ProductState cps;
  int restarts_used = 0;
  bool converged = false;
};

/// Maximal squared overlap with product states, with the maximizing product state.
/// `warm_starts` are tried before the random restarts.
CpsResult lambda2_pure(const PureState& psi, const OptimizerOptions& opts = {},
                       const std::vector<ProductState>& warm_starts = {});

struct PureGm {
  double g = 0.0;
  double g_log = 0.0;
};

PureGm gm_pure(const PureState& psi, const OptimizerOptions& opts = {});
/// (1 - lambda2, -log2 lambda2).
PureGm gm_from_lambda2(double lambda2);

}  // namespace gme
