#include "gme/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace gme {

double gt_isotropic_closed(int d, double p) {
  if (d < 2 || p < 0.0 || p > 1.0) throw std::invalid_argument("need d >= 2 and p in [0, 1]");
  const double dd = static_cast<double>(d);
  const double root = std::sqrt(std::max(0.0, (2.0 - p) * (2.0 - p) - 4.0 / dd * (1.0 - p)));
  const double t = root + (dd * dd - 2.0) * p / (dd * dd);
  return 0.25 * t * t;
}

ConcavityCheck gt_concavity_counterexample(int d, double p) {
  const double dd = static_cast<double>(d);
  ConcavityCheck c;
  c.lhs = gt_isotropic_closed(d, p);
  const double mixed = 1.0 - 1.0 / (dd * dd);
  c.rhs = p * mixed * mixed + (1.0 - p) * (1.0 - 1.0 / dd);
  c.violated = c.lhs < c.rhs - 1e-9;
  return c;
}

LogMinCheck constrained_log_min(int k, double n_const, double x_total, double y_total, int samples,
                                std::uint64_t seed) {
  if (k < 1 || !(n_const > 0.0) || !(x_total > 0.0) || y_total < 0.0) {
    throw std::invalid_argument("need k >= 1, n > 0, X > 0, Y >= 0");
  }
  LogMinCheck out;
  out.value = (x_total + y_total) * std::log2(n_const * (1.0 + y_total / x_total));
  out.best_sample = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> x(static_cast<std::size_t>(k));
  std::vector<double> y(static_cast<std::size_t>(k));
  auto split = [&](std::vector<double>& parts, double total) {
    double sum = 0.0;
    for (auto& v : parts) sum += (v = expo(rng));
    for (auto& v : parts) v *= total / sum;
  };
  for (int s = 0; s < samples; ++s) {
    split(x, x_total);
    split(y, y_total);
    double f = 0.0;
    for (int i = 0; i < k; ++i) {
      const auto j = static_cast<std::size_t>(i);
      f += (x[j] + y[j]) * std::log2(n_const * (1.0 + y[j] / x[j]));
    }
    out.best_sample = std::min(out.best_sample, f);
  }
  out.beaten = out.best_sample < out.value - 1e-9;
  return out;
}

void FhsSpec::validate() const {
  if (m < 1 || n < m) throw std::invalid_argument("need 1 <= m <= n");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("need q in (0, 1)");
}

double fhs_objective(const FhsSpec& spec, double h, double s) {
  const double q = spec.q;
  const double den = 1.0 - h * s;
  const double a = (q - s * (1.0 - q)) / den;
  const double b = ((1.0 - q) - h * q) / den;
  return a * (1.0 + h) * std::log2(spec.m * (1.0 + h)) + b * (1.0 + s) * std::log2(spec.n * (1.0 + s));
}

FhsMinimum fhs_minimum(const FhsSpec& spec) {
  spec.validate();
  const double m = spec.m;
  const double n = spec.n;
  const double q = spec.q;
  const double e = std::numbers::e;
  if (m / n >= 1.0 / e) return {q * std::log2(m) + (1.0 - q) * std::log2(n), 0.0, 0.0, 1};
  if (q >= e * m / n) return {std::log2(m / q), (1.0 - q) / q, 0.0, 2};
  return {std::log2(n) - q * n * std::numbers::log2e / (m * e), n / (e * m) - 1.0, 0.0, 3};
}

GridMinimum fhs_grid_minimum(const FhsSpec& spec, int points) {
  spec.validate();
  const double h_max = (1.0 - spec.q) / spec.q;
  const double s_max = spec.q / (1.0 - spec.q);
  GridMinimum best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (int i = 0; i < points; ++i) {
    const double h = h_max * i / (points - 1);
    for (int j = 0; j < points; ++j) {
      double s = s_max * j / (points - 1);
      // The corner itself is excluded; step one grid cell inside instead.
      if (i == points - 1 && j == points - 1) s = s_max * (j - 1) / (points - 1);
      const double f = fhs_objective(spec, h, s);
      if (f < best.value) best = {f, h, s};
    }
  }
  return best;
}

}  // namespace gme
