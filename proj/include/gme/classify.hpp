#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gme/families.hpp"
#include "gme/pure_gm.hpp"
#include "gme/tensor_core.hpp"

namespace gme {

/// A: pure product, B: pure entangled, C: mixed separable, D1-D3: mixed entangled
/// split by which of the logarithmic inequalities are tight.
enum class ClassLabel { A, B, C, D1, D2, D3 };

std::string to_string(ClassLabel label);

inline constexpr double kClassifierTolerance = 1e-6;

struct ClassEvidence {
  double purity = 0.0;
  std::optional<double> g_f_log;
  std::optional<double> g_c_log;
  std::optional<double> g_m_log;
  /// Which rule decided: "purity", "isotropic", "maximally correlated", "two-qubit", "numeric".
  std::string path;
  std::vector<std::string> notes;
};

struct Classification {
  /// Empty when the certified values cannot separate the cases at tolerance.
  std::optional<ClassLabel> label;
  ClassEvidence evidence;
};

Classification classify(const DensityMatrix& rho, const OptimizerOptions& opts = {});

/// Analytic rule for maximally correlated states; only rank >= 3 with unequal blocks
/// falls back to the convex-roof optimizer.
Classification classify_maxcorr(const MaxCorrSpec& spec, const OptimizerOptions& opts = {});

/// Recognizes states of the form sum_i q_i |Theta_i><Theta_i| up to local permutations and phases.
std::optional<MaxCorrSpec> recognize_maxcorr(const DensityMatrix& rho);
/// Recognizes p I/d^2 + (1-p)|Psi><Psi| exactly (no local unitary freedom).
std::optional<IsotropicSpec> recognize_isotropic(const DensityMatrix& rho);

/// Most negative eigenvalue over all partial transposes of proper party subsets.
double min_partial_transpose_eigenvalue(const DensityMatrix& rho);

}  // namespace gme
