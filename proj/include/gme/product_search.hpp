#pragma once

// Low-level machinery shared by every optimizer over product states:
// per-party contractions, seeded random starts and the alternating
// single-party eigen-update loops.

#include <cstdint>
#include <random>
#include <vector>

#include "gme/tensor_core.hpp"

namespace gme {

/// Digit table of a Space: digit(i, p) is the level of party p in flat index i.
class PartyLayout {
 public:
  explicit PartyLayout(const Space& space);

  [[nodiscard]] const Space& space() const { return space_; }
  [[nodiscard]] int parties() const { return space_.parties(); }
  [[nodiscard]] Index total_dim() const { return space_.total_dim(); }
  [[nodiscard]] int digit(Index i, int party) const {
    return digits_[static_cast<std::size_t>(i * space_.parties() + party)];
  }

 private:
  Space space_;
  std::vector<int> digits_;
};

using Factors = std::vector<Vector>;

/// Generator for restart `index` of a run seeded with `seed`.
std::mt19937_64 restart_rng(std::uint64_t seed, std::uint64_t index);
/// Normalized complex Gaussian vector.
Vector random_unit_vector(Index dim, std::mt19937_64& rng);
Factors random_factors(const Space& space, std::mt19937_64& rng);
/// Normalized complex Gaussian d x k matrix orthonormalized column-wise (k <= d).
Matrix random_isometry(Index rows, Index cols, std::mt19937_64& rng);

Vector product_vector(const Factors& factors);

/// sum_i t_i prod_{k != party} conj(f_k[digit_k(i)]), grouped by the level of `party`.
Vector contract_except(const Vector& t, const PartyLayout& layout, const Factors& factors, int party);
/// B^dag rho B where B embeds party `party` and fixes all other parties to their factors.
Matrix contract_operator_except(const Matrix& rho, const PartyLayout& layout, const Factors& factors, int party);

struct SweepResult {
  double value = 0.0;
  Factors factors;
  bool converged = false;
};

/// Maximizes |<phi|psi>|^2 by alternating updates starting from `start`.
SweepResult sweep_pure(const Vector& psi, const PartyLayout& layout, Factors start, int max_sweeps, double tol);
/// Maximizes <phi|rho|phi> by alternating top-eigenvector updates starting from `start`.
SweepResult sweep_mixed(const Matrix& rho, const PartyLayout& layout, Factors start, int max_sweeps, double tol);

/// Exact top Schmidt pair of a bipartite vector: returns s_1^2 and u_1 (x) conj(v_1).
SweepResult schmidt_top(const Vector& psi, int d0, int d1);

}  // namespace gme
