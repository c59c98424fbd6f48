#pragma once

#include <vector>

#include "gme/pure_gm.hpp"
#include "gme/tensor_core.hpp"

namespace gme {

struct Lambda2mResult {
  double lambda2m = 0.0;
  ProductState cps;
  bool converged = false;
};

/// max over product |phi> of <phi|rho|phi>; a certified lower bound.
Lambda2mResult lambda2_mixed(const DensityMatrix& rho, const OptimizerOptions& opts = {},
                             const std::vector<ProductState>& warm_starts = {});

struct MixedGm {
  double g_m = 0.0;
  double g_m_log = 0.0;
};

MixedGm gm_mixed(const DensityMatrix& rho, const OptimizerOptions& opts = {});

struct GtResult {
  double value = 0.0;
  ProductState cps;
  bool converged = false;
};

/// Squared trace distance from rho to the nearest pure product state.
/// D_T(rho, phi phi^dag) is the single positive eigenvalue of phi phi^dag - rho.
GtResult gt(const DensityMatrix& rho, const OptimizerOptions& opts = {});

/// D_T(rho, |phi><phi|)^2 for a product state.
double gt_objective(const DensityMatrix& rho, const ProductState& phi);

}  // namespace gme
