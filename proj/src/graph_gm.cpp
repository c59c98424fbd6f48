#include "gme/graph_gm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gme {

// ---------------------------------------------------------------------------
// GraphSpec

GraphSpec::GraphSpec(int vertex_count, std::vector<std::pair<int, int>> edges) : n_(vertex_count) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::invalid_argument("edge vertex out of range");
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

GraphSpec GraphSpec::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return GraphSpec(n, std::move(e));
}

GraphSpec GraphSpec::ring(int n) {
  if (n < 3) throw std::invalid_argument("ring needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return GraphSpec(n, std::move(e));
}

GraphSpec GraphSpec::parse(const std::string& edges, int vertex_count) {
  std::vector<std::pair<int, int>> e;
  int top = -1;
  std::stringstream ss(edges);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge '" + item + "' is not of the form a-b");
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string sa = item.substr(0, dash);
    const std::string sb = item.substr(dash + 1);
    const int a = std::stoi(sa, &used_a);
    const int b = std::stoi(sb, &used_b);
    if (sa.find_first_not_of(" \t", used_a) != std::string::npos || sb.find_first_not_of(" \t", used_b) != std::string::npos) {
      throw std::invalid_argument("edge '" + item + "' is not of the form a-b");
    }
    e.emplace_back(a, b);
    top = std::max({top, a, b});
  }
  return GraphSpec(vertex_count > 0 ? vertex_count : top + 1, std::move(e));
}

std::vector<int> GraphSpec::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// maximum independent set

namespace {

using Mask = std::uint32_t;

class MisSearch {
 public:
  explicit MisSearch(const GraphSpec& g) : adj_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (auto [a, b] : g.edges()) {
      adj_[static_cast<std::size_t>(a)] |= Mask{1} << b;
      adj_[static_cast<std::size_t>(b)] |= Mask{1} << a;
    }
  }

  [[nodiscard]] Mask adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  int size(Mask candidates) {
    best_ = 0;
    search(candidates, 0);
    return best_;
  }

 private:
  void search(Mask mask, int size) {
    const int left = std::popcount(mask);
    if (size + left <= best_) return;
    int pivot = -1;
    int degree = -1;
    for (Mask m = mask; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int dv = std::popcount(adj_[static_cast<std::size_t>(v)] & mask);
      if (dv > degree) {
        degree = dv;
        pivot = v;
      }
    }
    if (degree <= 0) {
      best_ = std::max(best_, size + left);
      return;
    }
    const Mask bit = Mask{1} << pivot;
    search(mask & ~adj_[static_cast<std::size_t>(pivot)] & ~bit, size + 1);
    search(mask & ~bit, size);
  }

  std::vector<Mask> adj_;
  int best_ = 0;
};

}  // namespace

std::vector<int> maximum_independent_set(const GraphSpec& g) {
  const int n = g.vertex_count();
  if (n > kMaxGraphVertices) throw std::length_error("graph exceeds the exact search budget of 24 vertices");
  MisSearch s(g);
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const int target = s.size(all);

  // Greedy in vertex order, keeping only choices that still reach the optimum.
  std::vector<int> chosen;
  Mask avail = all;
  for (int v = 0; v < n; ++v) {
    const Mask bit = Mask{1} << v;
    if (!(avail & bit)) continue;
    const Mask later = all & ~((bit << 1) - 1);
    const Mask with = avail & ~s.adjacency(v) & later;
    if (static_cast<int>(chosen.size()) + 1 + s.size(with) == target) {
      chosen.push_back(v);
      avail = (avail & ~s.adjacency(v)) & ~bit;
    } else {
      avail &= ~bit;
    }
  }
  return chosen;
}

// ---------------------------------------------------------------------------
// states

PureState build_graph_state(const GraphSpec& g) {
  const int n = g.vertex_count();
  if (n > kMaxDenseGraphQubits) throw std::length_error("graph state exceeds the dense budget of 12 qubits");
  const Space space(std::vector<int>(static_cast<std::size_t>(n), 2));
  const Index total = space.total_dim();
  Vector v(total);
  const double amp = std::pow(2.0, -0.5 * n);
  for (Index x = 0; x < total; ++x) {
    int parity = 0;
    for (auto [a, b] : g.edges()) parity ^= static_cast<int>((x >> (n - 1 - a)) & (x >> (n - 1 - b)) & 1);
    v(x) = parity ? -amp : amp;
  }
  return PureState::normalized(space, v);
}

namespace {

int bit_of(Index x, int qubit, int n) { return static_cast<int>((x >> (n - 1 - qubit)) & 1); }

// Product form of the branch where the beta qubits read `z` (bit i of z is beta[i]).
std::vector<Vector> branch_factors(const GraphSpec& g, const GraphAnalysis& a, Index z) {
  const int n = g.vertex_count();
  std::vector<int> value(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < a.beta.size(); ++i) value[static_cast<std::size_t>(a.beta[i])] = static_cast<int>((z >> i) & 1);
  std::vector<Vector> f(static_cast<std::size_t>(n), Vector::Zero(2));
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<bool> in_beta(static_cast<std::size_t>(n), false);
  for (int b : a.beta) in_beta[static_cast<std::size_t>(b)] = true;
  for (int v = 0; v < n; ++v) {
    auto& fv = f[static_cast<std::size_t>(v)];
    if (in_beta[static_cast<std::size_t>(v)]) {
      fv(value[static_cast<std::size_t>(v)]) = 1.0;
    } else {
      int s = 0;
      for (int k : g.neighbors(v)) s ^= value[static_cast<std::size_t>(k)];
      fv(0) = h;
      fv(1) = s ? -h : h;
    }
  }
  return f;
}

}  // namespace

GraphAnalysis analyze_graph(const GraphSpec& g, const OptimizerOptions& opts) {
  GraphAnalysis a;
  a.alpha = maximum_independent_set(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!std::binary_search(a.alpha.begin(), a.alpha.end(), v)) a.beta.push_back(v);
  }
  a.d_alpha = 1LL << a.beta.size();
  if (g.vertex_count() >= 2 && g.vertex_count() <= kMaxDenseGraphQubits) {
    const PureState psi = build_graph_state(g);
    const auto r = lambda2_pure(psi, opts, {ProductState(branch_factors(g, a, 0))});
    a.lambda2 = r.lambda2;
    a.minimal_rank = std::abs(r.lambda2 - 1.0 / static_cast<double>(a.d_alpha)) <= 1e-4;
  }
  return a;
}

DeltaConstruction build_delta(const GraphSpec& g, const GraphAnalysis& a) {
  const int n = g.vertex_count();
  if (n > kMaxDenseDeltaQubits) throw std::length_error("dense delta exceeds the budget of 10 qubits");
  const PureState psi = build_graph_state(g);
  const Index total = psi.space().total_dim();
  Matrix delta = Matrix::Zero(total, total);
  double min_overlap = 1.0;
  for (Index z = 0; z < a.d_alpha; ++z) {
    Vector branch = Vector::Zero(total);
    for (Index x = 0; x < total; ++x) {
      bool match = true;
      for (std::size_t i = 0; i < a.beta.size() && match; ++i) match = bit_of(x, a.beta[i], n) == static_cast<int>((z >> i) & 1);
      if (match) branch(x) = psi.amplitudes()(x);
    }
    const double prob = branch.squaredNorm();
    if (prob < 1e-300) continue;
    branch /= std::sqrt(prob);
    const Vector product = ProductState(branch_factors(g, a, z)).vector();
    min_overlap = std::min(min_overlap, std::norm(product.dot(branch)));
    delta += prob * branch * branch.adjoint();
  }
  return {DensityMatrix::normalized(psi.space(), delta), min_overlap};
}

DensityMatrix stabilizer_projector_delta(const GraphSpec& g, const GraphAnalysis& a) {
  const int n = g.vertex_count();
  if (n > kMaxDenseDeltaQubits) throw std::length_error("dense delta exceeds the budget of 10 qubits");
  const Index total = Index{1} << n;
  Matrix p = Matrix::Identity(total, total);
  for (int j : a.alpha) {
    // (g_j P)[x ^ e_j, :] = (-1)^{sum_{k in N(j)} x_k} P[x, :]
    const auto nb = g.neighbors(j);
    const Index flip = Index{1} << (n - 1 - j);
    Matrix gp(total, total);
    for (Index x = 0; x < total; ++x) {
      int s = 0;
      for (int k : nb) s ^= bit_of(x, k, n);
      gp.row(x ^ flip) = (s ? -1.0 : 1.0) * p.row(x);
    }
    p = 0.5 * (p + gp);
  }
  return DensityMatrix::normalized(Space(std::vector<int>(static_cast<std::size_t>(n), 2)), p);
}

UniversalCssRecord verify_universal_css(const GraphSpec& g, const OptimizerOptions& opts) {
  const GraphAnalysis a = analyze_graph(g, opts);
  const PureState psi = build_graph_state(g);
  const DensityMatrix rho = psi.projector();
  const auto delta = build_delta(g, a);
  const DensityMatrix proj = stabilizer_projector_delta(g, a);

  UniversalCssRecord r;
  r.lambda2 = a.lambda2.value_or(std::numeric_limits<double>::quiet_NaN());
  r.d_alpha = a.d_alpha;
  r.bounds_only = !a.minimal_rank.value_or(false);
  r.trace_distance = trace_distance(rho, delta.delta);
  const double f = fidelity(rho, delta.delta);
  r.fidelity_squared = f * f;
  r.relative_entropy = relative_entropy(rho, delta.delta);
  r.projector_error = (delta.delta.matrix() - proj.matrix()).cwiseAbs().maxCoeff();
  r.min_branch_product_overlap = delta.min_branch_product_overlap;

  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix() - delta.delta.matrix(), Eigen::EigenvaluesOnly);
  for (Index i = solver.eigenvalues().size(); i-- > 0;) {
    const double v = solver.eigenvalues()(i);
    if (std::abs(v) > 1e-12) r.difference_spectrum.push_back(v);
  }
  const double d = static_cast<double>(a.d_alpha);
  std::vector<double> expected{(d - 1.0) / d};
  for (long long k = 1; k < a.d_alpha; ++k) expected.push_back(-1.0 / d);
  if (expected.size() != r.difference_spectrum.size()) {
    r.spectrum_error = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      r.spectrum_error = std::max(r.spectrum_error, std::abs(expected[i] - r.difference_spectrum[i]));
    }
  }
  return r;
}

}  // namespace gme
