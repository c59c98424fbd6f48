#include "gme/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "gme/convex_roof.hpp"
#include "gme/mixed_gm.hpp"

namespace gme {

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::A: return "A";
    case ClassLabel::B: return "B";
    case ClassLabel::C: return "C";
    case ClassLabel::D1: return "D1";
    case ClassLabel::D2: return "D2";
    case ClassLabel::D3: return "D3";
  }
  return "?";
}

namespace {

constexpr double kEntryTolerance = 1e-10;

Classification labelled(ClassLabel label, ClassEvidence evidence) { return {label, std::move(evidence)}; }

}  // namespace

std::optional<MaxCorrSpec> recognize_maxcorr(const DensityMatrix& rho) {
  const auto& dims = rho.space().dims();
  if (dims.size() != 2 || dims[0] != dims[1]) return std::nullopt;
  const int d = dims[0];
  const Matrix& m = rho.matrix();
  auto diagonal_index = [d](Index i) { return i / d == i % d; };
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if ((!diagonal_index(i) || !diagonal_index(j)) && std::abs(m(i, j)) > kEntryTolerance) return std::nullopt;
    }
  }
  auto at = [&](int k, int l) { return m(static_cast<Index>(k) * d + k, static_cast<Index>(l) * d + l); };

  std::vector<int> active;
  for (int k = 0; k < d; ++k) {
    if (at(k, k).real() > kEntryTolerance) active.push_back(k);
  }
  if (active.size() < 2) return std::nullopt;

  // Connected components of the support graph of <kk|rho|ll>.
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int k : active) {
    for (int l : active) {
      if (k < l && std::abs(at(k, l)) > kEntryTolerance) parent[static_cast<std::size_t>(find(k))] = find(l);
    }
  }
  std::map<int, std::vector<int>> blocks;  // keyed by root; ordered below by first level
  for (int k : active) blocks[find(k)].push_back(k);
  std::vector<std::vector<int>> ordered;
  for (auto& [root, levels] : blocks) ordered.push_back(levels);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  MaxCorrSpec spec;
  spec.partition.push_back(0);
  for (const auto& levels : ordered) {
    const double w = at(levels.front(), levels.front()).real();
    double weight = 0.0;
    for (int k : levels) {
      const double wk = at(k, k).real();
      if (std::abs(wk - w) > 1e-9) return std::nullopt;
      for (int l : levels) {
        if (std::abs(std::abs(at(k, l)) - std::sqrt(wk * at(l, l).real())) > 1e-9) return std::nullopt;
      }
      weight += wk;
    }
    spec.partition.push_back(spec.partition.back() + static_cast<int>(levels.size()));
    spec.weights.push_back(weight);
  }
  spec.d = spec.partition.back();
  const double total = std::accumulate(spec.weights.begin(), spec.weights.end(), 0.0);
  for (auto& w : spec.weights) w /= total;
  if (spec.d < 2) return std::nullopt;
  try {
    spec.validate();
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return spec;
}

std::optional<IsotropicSpec> recognize_isotropic(const DensityMatrix& rho) {
  const auto& dims = rho.space().dims();
  if (dims.size() != 2 || dims[0] != dims[1]) return std::nullopt;
  const int d = dims[0];
  const Vector psi = make_mes(d).amplitudes();
  const double f = psi.dot(rho.matrix() * psi).real();
  if (f < 1.0 / (static_cast<double>(d) * d) - 1e-12) return std::nullopt;
  const auto spec = IsotropicSpec::from_f(d, std::min(f, 1.0));
  if ((make_isotropic(spec).matrix() - rho.matrix()).cwiseAbs().maxCoeff() > kEntryTolerance) return std::nullopt;
  return spec;
}

double min_partial_transpose_eigenvalue(const DensityMatrix& rho) {
  const int n = rho.space().parties();
  double lowest = 0.0;
  // Subsets and their complements share a spectrum, so party 0 is never transposed.
  for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> parties;
    for (int p = 1; p < n; ++p) {
      if (mask & (1 << (p - 1))) parties.push_back(p);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(partial_transpose(rho, parties), Eigen::EigenvaluesOnly);
    lowest = std::min(lowest, solver.eigenvalues()(0));
  }
  return lowest;
}

Classification classify_maxcorr(const MaxCorrSpec& spec, const OptimizerOptions& opts) {
  spec.validate();
  const auto closed = maxcorr_closed_forms(spec);
  ClassEvidence ev;
  ev.path = "maximally correlated";
  ev.purity = 0.0;
  for (double q : spec.weights) ev.purity += q * q;
  ev.g_f_log = closed.g_f_log;
  ev.g_m_log = closed.g_m_log;
  ev.g_c_log = closed.g_c_log;

  if (spec.rank() == 1) {
    ev.notes.emplace_back("single block: pure state");
    return labelled(spec.block(0) == 1 ? ClassLabel::A : ClassLabel::B, std::move(ev));
  }
  bool all_single = true;
  bool equal_blocks = true;
  for (int i = 0; i < spec.rank(); ++i) {
    all_single = all_single && spec.block(i) == 1;
    equal_blocks = equal_blocks && spec.block(i) == spec.block(0);
  }
  if (all_single) {
    ev.notes.emplace_back("all blocks have one level: diagonal in a product basis");
    return labelled(ClassLabel::C, std::move(ev));
  }
  if (spec.rank() == 2) {
    const bool swap = spec.block(0) > spec.block(1);
    const double m = spec.block(swap ? 1 : 0);
    const double n = spec.block(swap ? 0 : 1);
    const double q = spec.weights[swap ? 1 : 0];
    ev.notes.emplace_back("rank two with block sizes " + std::to_string(static_cast<int>(m)) + " <= " +
                          std::to_string(static_cast<int>(n)));
    if (m == n) return labelled(ClassLabel::D2, std::move(ev));
    if (m / n < 1.0 / std::numbers::e && q >= std::numbers::e * m / n) return labelled(ClassLabel::D3, std::move(ev));
    return labelled(ClassLabel::D1, std::move(ev));
  }
  if (equal_blocks) {
    ev.notes.emplace_back("equal block sizes");
    return labelled(ClassLabel::D2, std::move(ev));
  }
  // Unequal blocks: the fidelity and convex-roof logarithmic values differ; only the
  // comparison with the trace-inner-product value remains.
  const auto roof = convex_roof(make_maxcorr(spec), RoofKind::logarithmic, opts);
  ev.g_c_log = roof.value;
  ev.notes.emplace_back("convex-roof certificate used for the logarithmic roof");
  if (roof.value < closed.g_m_log - kClassifierTolerance) return labelled(ClassLabel::D1, std::move(ev));
  ev.notes.emplace_back("roof certificate within tolerance of the trace-inner-product value");
  return {std::nullopt, std::move(ev)};
}

Classification classify(const DensityMatrix& rho, const OptimizerOptions& opts) {
  ClassEvidence ev;
  ev.purity = rho.purity();

  if (rho.is_pure()) {
    ev.path = "purity";
    const auto eig = hermitian_eigen(rho.matrix());
    const PureState psi = PureState::normalized(rho.space(), eig.vectors.col(eig.values.size() - 1));
    const double l = lambda2_pure(psi, opts).lambda2;
    ev.g_f_log = ev.g_c_log = ev.g_m_log = -std::log2(l);
    return labelled(l >= 1.0 - 1e-9 ? ClassLabel::A : ClassLabel::B, std::move(ev));
  }

  if (const auto iso = recognize_isotropic(rho)) {
    const auto c = iso_closed_forms(*iso);
    ev.path = "isotropic";
    ev.g_f_log = ev.g_c_log = c.g_fc_log;
    ev.g_m_log = c.g_m_log;
    return labelled(c.separable ? ClassLabel::C : ClassLabel::D2, std::move(ev));
  }

  if (const auto mc = recognize_maxcorr(rho)) {
    auto c = classify_maxcorr(*mc, opts);
    c.evidence.purity = ev.purity;
    return c;
  }

  if (rho.space() == Space({2, 2})) {
    const auto c = two_qubit_closed_forms(rho);
    ev.path = "two-qubit";
    ev.g_f_log = ev.g_c_log = c.g_c_log;
    ev.g_m_log = -std::log2(lambda2_mixed(rho, opts).lambda2m);
    ev.notes.emplace_back("concurrence " + std::to_string(c.concurrence));
    return labelled(c.concurrence <= 0.0 ? ClassLabel::C : ClassLabel::D2, std::move(ev));
  }

  ev.path = "numeric";
  const double neg = min_partial_transpose_eigenvalue(rho);
  const bool npt = neg < -1e-9;
  if (npt) ev.notes.emplace_back("negative partial transpose certifies entanglement");

  const auto lin = convex_roof(rho, RoofKind::linear, opts);
  const auto lg = convex_roof(rho, RoofKind::logarithmic, opts);
  // Each certificate decomposition also bounds the other roof.
  const double g_c = std::min(lin.value, roof_value(lg.decomposition, lg.per_member_lambda2, RoofKind::linear));
  const double g_c_log = std::min(lg.value, roof_value(lin.decomposition, lin.per_member_lambda2, RoofKind::logarithmic));
  ev.g_f_log = -std::log2(1.0 - g_c);
  ev.g_c_log = g_c_log;
  ev.g_m_log = -std::log2(lambda2_mixed(rho, opts).lambda2m);

  if (!npt && g_c <= kClassifierTolerance) {
    ev.notes.emplace_back("convex-roof certificate vanishes at tolerance");
    return labelled(ClassLabel::C, std::move(ev));
  }
  if (!npt) ev.notes.emplace_back("entanglement inferred from a nonvanishing convex-roof value");

  const double fc_gap = *ev.g_c_log - *ev.g_f_log;
  const double cm_gap = *ev.g_m_log - *ev.g_c_log;
  if (fc_gap > kClassifierTolerance && cm_gap > kClassifierTolerance) return labelled(ClassLabel::D1, std::move(ev));
  if (fc_gap <= kClassifierTolerance && cm_gap > kClassifierTolerance) return labelled(ClassLabel::D2, std::move(ev));
  if (cm_gap <= kClassifierTolerance && fc_gap > kClassifierTolerance) return labelled(ClassLabel::D3, std::move(ev));
  ev.notes.emplace_back("logarithmic values indistinguishable at tolerance");
  return {std::nullopt, std::move(ev)};
}

}  // namespace gme
