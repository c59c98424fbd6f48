#pragma once

#include <cstdint>

namespace gme {

/// Trace-distance GM of the two-qudit isotropic state with noise weight p.
double gt_isotropic_closed(int d, double p);

struct ConcavityCheck {
  double lhs = 0.0;  // value at the mixture
  double rhs = 0.0;  // mixture of the endpoint values
  bool violated = false;
};

/// Compares G^t of the isotropic state with the same mixture of the endpoint values.
ConcavityCheck gt_concavity_counterexample(int d, double p);

struct LogMinCheck {
  double value = 0.0;
  /// Smallest objective found by random feasible sampling.
  double best_sample = 0.0;
  bool beaten = false;
};

/// min sum_i (x_i + y_i) log2[n (1 + y_i / x_i)] subject to sum x_i = X, sum y_i = Y,
/// verified against `samples` random feasible points.
LogMinCheck constrained_log_min(int k, double n_const, double x_total, double y_total, int samples = 10000,
                                std::uint64_t seed = 0);

struct FhsSpec {
  int m = 1;
  int n = 1;
  double q = 0.5;
  void validate() const;
};

struct FhsMinimum {
  double value = 0.0;
  double h = 0.0;
  double s = 0.0;
  int regime = 1;
};

/// Two-parameter objective over decompositions of a rank-2 maximally correlated state.
double fhs_objective(const FhsSpec& spec, double h, double s);
FhsMinimum fhs_minimum(const FhsSpec& spec);

struct GridMinimum {
  double value = 0.0;
  double h = 0.0;
  double s = 0.0;
};

/// Brute-force minimum of fhs_objective on a points x points grid kept one step inside the domain corner.
GridMinimum fhs_grid_minimum(const FhsSpec& spec, int points = 2000);

}  // namespace gme
