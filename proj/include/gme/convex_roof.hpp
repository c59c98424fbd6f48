#pragma once

#include <string>
#include <vector>

#include "gme/pure_gm.hpp"
#include "gme/tensor_core.hpp"

namespace gme {

enum class RoofKind { linear, logarithmic };

struct WeightedState {
  double p;
  PureState psi;
};

/// Probability-weighted pure-state ensemble.
class Decomposition {
 public:
  /// Throws unless all weights are positive and sum to 1 within 1e-10.
  explicit Decomposition(std::vector<WeightedState> members);

  [[nodiscard]] const std::vector<WeightedState>& members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] Matrix mixture() const;
  /// Max-abs deviation of the mixture from rho.
  [[nodiscard]] double reconstruction_error(const DensityMatrix& rho) const;

 private:
  std::vector<WeightedState> members_;
};

struct RoofResult {
  double value = 0.0;
  Decomposition decomposition;
  std::vector<double> per_member_lambda2;
  std::vector<ProductState> per_member_cps;
  bool converged = false;
  std::vector<std::string> warnings;
};

/// Average of the pure-state measure over a decomposition with given member lambda2 values.
double roof_value(const Decomposition& d, const std::vector<double>& lambda2, RoofKind kind);

/// Certified upper bound on the convex roof of the linear or logarithmic pure-state GM.
RoofResult convex_roof(const DensityMatrix& rho, RoofKind kind, const OptimizerOptions& opts = {});

struct FidelityExtension {
  double g_f = 0.0;
  double g_f_log = 0.0;
  double lambda2f = 1.0;
  /// Mixture of the member product states of the linear roof certificate.
  DensityMatrix css;
  double css_fidelity = 0.0;
  RoofResult roof;
};

FidelityExtension fidelity_extension(const DensityMatrix& rho, const OptimizerOptions& opts = {});

/// Decomposition of rho whose members all have squared overlap <phi|rho|phi> with phi.
Decomposition equal_overlap_decomposition(const DensityMatrix& rho, const PureState& phi);

}  // namespace gme
