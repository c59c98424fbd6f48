#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gme/pure_gm.hpp"
#include "gme/tensor_core.hpp"

namespace gme {

inline constexpr int kMaxGraphVertices = 24;
inline constexpr int kMaxDenseGraphQubits = 12;
inline constexpr int kMaxDenseDeltaQubits = 10;

class GraphSpec {
 public:
  /// Throws on self-loops or out-of-range vertices; duplicate edges are merged.
  GraphSpec(int vertex_count, std::vector<std::pair<int, int>> edges);

  static GraphSpec path(int n);
  static GraphSpec ring(int n);
  /// Parses "0-1,1-2,..."; the vertex count defaults to the largest label + 1.
  static GraphSpec parse(const std::string& edges, int vertex_count = 0);

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  [[nodiscard]] std::vector<int> neighbors(int v) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

struct GraphAnalysis {
  std::vector<int> alpha;  // lexicographically smallest maximum independent set
  std::vector<int> beta;   // its complement, a minimum vertex cover
  long long d_alpha = 1;   // 2^|beta|
  /// Numeric check lambda2(|G>) == 2^-|beta| at 1e-4; empty when the state is too large to build.
  std::optional<bool> minimal_rank;
  std::optional<double> lambda2;
};

/// Exact maximum independent set by branch and bound (n <= 24).
std::vector<int> maximum_independent_set(const GraphSpec& g);
GraphAnalysis analyze_graph(const GraphSpec& g, const OptimizerOptions& opts = {});

/// prod CZ |+>^n, qubit 0 most significant.
PureState build_graph_state(const GraphSpec& g);

struct DeltaConstruction {
  DensityMatrix delta;
  /// Smallest squared overlap of a measurement branch with its explicit product form.
  double min_branch_product_overlap = 1.0;
};

/// Uniform mixture of the Z-measurement branches of the beta qubits.
DeltaConstruction build_delta(const GraphSpec& g, const GraphAnalysis& analysis);
/// prod_{j in alpha} (I + g_j)/2 normalized; g_j = X_j prod_{k in N(j)} Z_k.
DensityMatrix stabilizer_projector_delta(const GraphSpec& g, const GraphAnalysis& analysis);

struct UniversalCssRecord {
  double lambda2 = 0.0;
  long long d_alpha = 1;
  double trace_distance = 0.0;
  double fidelity_squared = 0.0;
  double relative_entropy = 0.0;
  /// Descending spectrum of |G><G| - delta (zeros dropped at 1e-12).
  std::vector<double> difference_spectrum;
  double spectrum_error = 0.0;
  double projector_error = 0.0;
  double min_branch_product_overlap = 1.0;
  /// Set when the minimal-rank premise fails: the values are then upper bounds only.
  bool bounds_only = false;
};

UniversalCssRecord verify_universal_css(const GraphSpec& g, const OptimizerOptions& opts = {});

}  // namespace gme
