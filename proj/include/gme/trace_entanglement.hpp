#pragma once

#include <string>
#include <vector>

#include "gme/convex_roof.hpp"
#include "gme/pure_gm.hpp"
#include "gme/tensor_core.hpp"

namespace gme {

/// Two-sided estimate of the squared trace distance to the separable set.
struct TraceEntBracket {
  double lower = 0.0;
  double upper = 1.0;
  /// Separable candidate attaining `upper`.
  DensityMatrix witness_upper;
  std::string witness_kind;
  /// True when `lower` rests on an exact product-state overlap.
  bool lower_certified = false;
};

/// `extra_candidates` must be separable; they join the built-in candidate set.
/// A precomputed fidelity extension of rho is reused instead of rerunning the linear roof.
TraceEntBracket trace_ent_bracket(const DensityMatrix& rho, const OptimizerOptions& opts = {},
                                  const std::vector<DensityMatrix>& extra_candidates = {},
                                  const FidelityExtension* fidelity = nullptr);

/// Dephasing of rho in the product basis whose first vectors are the given factors.
DensityMatrix dephase_in_product_basis(const DensityMatrix& rho, const ProductState& anchor);

}  // namespace gme
