#pragma once
// Reference values written from the closed formulas, independent of the library code paths.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

inline double iso_lambda2f(int d, double f) {
  if (f <= 1.0 / d) return 1.0;
  const double r = std::sqrt(f) + std::sqrt((d - 1.0) * (1.0 - f));
  return r * r / d;
}
inline double iso_gfc(int d, double f) { return 1.0 - iso_lambda2f(d, f); }
inline double iso_gfc_log(int d, double f) { return -std::log2(iso_lambda2f(d, f)); }

// Wootters concurrence from the eigenvalues of rho * rho_tilde (non-Hermitian route).
inline double concurrence(const Eigen::MatrixXcd& rho) {
  Eigen::MatrixXcd yy = Eigen::MatrixXcd::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(3, 0) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  const Eigen::MatrixXcd tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(rho * tilde);
  std::vector<double> l;
  for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
  std::sort(l.rbegin(), l.rend());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}
inline double two_qubit_lambda2(double c) { return 0.5 * (1.0 + std::sqrt(1.0 - c * c)); }

// Minimum over decompositions of a rank-2 maximally correlated state, three cases.
inline double fhs_min(int m, int n, double q) {
  const double e = std::numbers::e;
  const double r = static_cast<double>(m) / n;
  if (r >= 1.0 / e) return q * std::log2(m) + (1.0 - q) * std::log2(n);
  if (q >= e * r) return std::log2(m / q);
  return std::log2(n) - q * n * std::log2(e) / (m * e);
}

inline double gt_iso(int d, double p) {
  const double a = std::sqrt((2.0 - p) * (2.0 - p) - 4.0 / d * (1.0 - p)) + (d * d - 2.0) * p / (d * d);
  return 0.25 * a * a;
}

inline double dicke_lambda2(int n, int k) {
  double binom = 1.0;
  for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
  const double x = static_cast<double>(k) / n;
  return binom * std::pow(x, k) * std::pow(1.0 - x, n - k);
}

// Maximum independent set size by exhaustive enumeration.
inline int mis_size(int n, const std::vector<std::pair<int, int>>& edges) {
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [a, b] : edges) ok = ok && !((mask >> a) & 1u && (mask >> b) & 1u);
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

}  // namespace oracle
