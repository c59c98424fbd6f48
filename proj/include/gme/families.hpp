#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gme/convex_roof.hpp"
#include "gme/tensor_core.hpp"

namespace gme {

/// (1/sqrt d) sum_i |ii>.
PureState make_mes(int d);
/// (1/sqrt d) sum_i |i...i> on n parties.
PureState make_ghz(int n, int d = 2);
/// Equal superposition of the n single-excitation qubit states.
PureState make_w(int n);
/// Equal superposition of the n-qubit basis states with k excitations.
PureState make_dicke(int n, int k);

/// Normalized complex Gaussian vector.
PureState random_pure(const Space& space, std::mt19937_64& rng);
/// G G^dag / Tr(G G^dag) with complex Gaussian G of full rank, or of `rank` columns if given.
DensityMatrix random_mixed(const Space& space, std::mt19937_64& rng, int rank = 0);

// ---------------------------------------------------------------------------
// isotropic states  p I/d^2 + (1-p) |Psi><Psi|

class IsotropicSpec {
 public:
  static IsotropicSpec from_p(int d, double p);
  static IsotropicSpec from_f(int d, double f);

  [[nodiscard]] int d() const { return d_; }
  /// Overlap with the maximally entangled state.
  [[nodiscard]] double f() const { return f_; }
  [[nodiscard]] double p() const;

 private:
  IsotropicSpec(int d, double f);
  int d_;
  double f_;
};

DensityMatrix make_isotropic(const IsotropicSpec& spec);

struct IsotropicClosedForms {
  bool separable = false;
  double lambda2m = 0.0;
  double g_m = 0.0;
  double g_m_log = 0.0;
  /// Common value of the fidelity and convex-roof extensions (linear).
  double g_fc = 0.0;
  /// Common value of the logarithmic fidelity and convex-roof extensions.
  double g_fc_log = 0.0;
  double gt = 0.0;
};

IsotropicClosedForms iso_closed_forms(const IsotropicSpec& spec);

// ---------------------------------------------------------------------------
// maximally correlated states  sum_i q_i |Theta_i><Theta_i|

struct MaxCorrSpec {
  int d = 0;
  /// 0 = n_0 < n_1 < ... < n_r = d
  std::vector<int> partition;
  std::vector<double> weights;

  /// Throws std::invalid_argument when the invariants fail.
  void validate() const;
  [[nodiscard]] int rank() const { return static_cast<int>(weights.size()); }
  [[nodiscard]] int block(int i) const {
    return partition.at(static_cast<std::size_t>(i) + 1) - partition.at(static_cast<std::size_t>(i));
  }
  /// Two blocks of sizes m and n on d = m + n levels.
  static MaxCorrSpec rank2(int m, int n, double q);
};

/// Block maximally entangled state on levels n_{i}..n_{i+1}-1.
PureState maxcorr_theta(const MaxCorrSpec& spec, int i);
DensityMatrix make_maxcorr(const MaxCorrSpec& spec);

struct Rank2LogRoof {
  double value = 0.0;
  /// 1: balanced blocks, 2: small block dominant, 3: intermediate.
  int regime = 1;
  /// Mixing amplitude squared of the larger block into the smaller-block members.
  double h = 0.0;
};

/// Exact logarithmic convex roof of a rank-2 maximally correlated state with
/// block sizes (m, n), m <= n, weights (q, 1 - q).
Rank2LogRoof rank2_log_roof(int m, int n, double q);

struct MaxCorrClosedForms {
  double g_c = 0.0;  // equals the fidelity extension
  double g_f_log = 0.0;
  double lambda2m = 0.0;
  double g_m = 0.0;
  double g_m_log = 0.0;
  std::optional<double> g_c_log;
  std::string g_c_log_source;  // "closed form", "equal blocks" or "optimizer only"
  std::optional<Decomposition> log_decomposition;
  std::optional<int> regime;
};

MaxCorrClosedForms maxcorr_closed_forms(const MaxCorrSpec& spec);

// ---------------------------------------------------------------------------
// two qubits

struct TwoQubitClosedForms {
  double concurrence = 0.0;
  double g_c = 0.0;
  double g_c_log = 0.0;
};

TwoQubitClosedForms two_qubit_closed_forms(const DensityMatrix& rho);

}  // namespace gme
