#include "gme/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gme/appendix.hpp"
#include "gme/classify.hpp"
#include "gme/convex_roof.hpp"
#include "gme/families.hpp"
#include "gme/graph_gm.hpp"
#include "gme/mixed_gm.hpp"
#include "gme/product_search.hpp"
#include "gme/trace_entanglement.hpp"

namespace gme {

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; }));
}

int SuiteResult::failed() const { return static_cast<int>(checks.size()) - passed(); }

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void check(std::string name, bool pass, std::string detail, std::optional<AnyState> repro = std::nullopt) {
    r_.checks.push_back({std::move(name), pass, std::move(detail), pass ? std::nullopt : std::move(repro)});
  }

  void close(std::string name, double value, double expected, double tol,
             std::optional<AnyState> repro = std::nullopt) {
    const bool pass = std::abs(value - expected) <= tol;
    check(std::move(name), pass,
          format_number(value) + " vs " + format_number(expected) + " (tol " + format_number(tol) + ")",
          std::move(repro));
  }

  void below(std::string name, double lhs, double rhs, double slack, std::optional<AnyState> repro = std::nullopt) {
    check(std::move(name), lhs <= rhs + slack, format_number(lhs) + " <= " + format_number(rhs), std::move(repro));
  }

 private:
  SuiteResult& r_;
};

Space qubits(int n) { return Space(std::vector<int>(static_cast<std::size_t>(n), 2)); }

/// (sum_k c_k |kk>) / sqrt(#levels) on two d-level parties.
Vector correlated(int d, const std::vector<int>& levels, const std::vector<Complex>& phases = {}) {
  Vector v = Vector::Zero(static_cast<Index>(d) * d);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Index k = levels[i];
    v(k * d + k) = phases.empty() ? Complex(1.0) : phases[i];
  }
  return v.normalized();
}

DensityMatrix mixture(int d, const std::vector<std::pair<double, Vector>>& parts) {
  const Index n = static_cast<Index>(d) * d;
  Matrix m = Matrix::Zero(n, n);
  for (const auto& [p, v] : parts) m += p * v * v.adjoint();
  return DensityMatrix::normalized(Space({d, d}), m);
}

DensityMatrix average(const std::vector<DensityMatrix>& states) {
  Matrix m = Matrix::Zero(states.front().matrix().rows(), states.front().matrix().cols());
  for (const auto& s : states) m += s.matrix();
  return DensityMatrix::normalized(states.front().space(), m);
}

std::string label_of(const Classification& c) { return c.label ? to_string(*c.label) : "undecided"; }

void expect_label(Recorder& rec, const std::string& name, const DensityMatrix& rho, ClassLabel expected,
                  const OptimizerOptions& opts) {
  const auto c = classify(rho, opts);
  rec.check(name + " -> " + to_string(expected), c.label == expected,
            "got " + label_of(c) + " via " + c.evidence.path, rho);
}

// Label implied by the exact logarithmic values of a rank-2 maximally correlated state.
ClassLabel label_from_values(const MaxCorrSpec& spec) {
  const auto c = maxcorr_closed_forms(spec);
  const double fc = *c.g_c_log - c.g_f_log;
  const double cm = c.g_m_log - *c.g_c_log;
  constexpr double tol = 1e-9;
  if (fc > tol && cm > tol) return ClassLabel::D1;
  if (fc <= tol && cm > tol) return ClassLabel::D2;
  if (cm <= tol && fc > tol) return ClassLabel::D3;
  return ClassLabel::C;
}

// ---------------------------------------------------------------------------

void hierarchy_suite(Recorder& rec, const SuiteOptions& o) {
  for (int k = 0; k < o.samples; ++k) {
    for (int n : {2, 3}) {
      auto rng = restart_rng(o.seed ^ (0x6869ULL + static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(k));
      const DensityMatrix rho = random_mixed(qubits(n), rng);
      const auto r = build_report(rho, o.opts, {false});
      const std::string name = std::to_string(n) + "-qubit sample " + std::to_string(k);
      std::string failed;
      for (const auto& c : r.checks) {
        if (!c.ok) failed += (failed.empty() ? "" : "; ") + c.relation;
      }
      rec.check(name + " hierarchy", r.hierarchy_ok(), failed.empty() ? "all relations hold" : failed, rho);
      rec.below(name + " certificates recompute", r.max_recomputation_error(), 1e-8, 0.0, rho);
    }
  }
  // The logarithmic roof leg needs closed forms to be checked against.
  const std::vector<std::pair<std::string, DensityMatrix>> families{
      {"isotropic d=2 F=0.8", make_isotropic(IsotropicSpec::from_f(2, 0.8))},
      {"isotropic d=3 F=0.6", make_isotropic(IsotropicSpec::from_f(3, 0.6))},
      {"maximally correlated (1,3,0.5)", make_maxcorr(MaxCorrSpec::rank2(1, 3, 0.5))},
      {"maximally correlated (2,3,0.4)", make_maxcorr(MaxCorrSpec::rank2(2, 3, 0.4))},
  };
  for (const auto& [name, rho] : families) {
    const auto r = build_report(rho, o.opts);
    std::string failed;
    for (const auto& c : r.checks) {
      if (!c.ok) failed += (failed.empty() ? "" : "; ") + c.relation;
    }
    rec.check(name + " hierarchy with logarithmic roof", r.hierarchy_ok(),
              failed.empty() ? "all relations hold" : failed, rho);
  }
}

void partition_suite(Recorder& rec, const SuiteOptions& o) {
  const auto& opts = o.opts;
  {
    Vector v = Vector::Zero(4);
    v(0) = 1.0;
    expect_label(rec, "|00>", PureState(Space({2, 2}), v).projector(), ClassLabel::A, opts);
  }
  expect_label(rec, "Bell state", make_mes(2).projector(), ClassLabel::B, opts);
  expect_label(rec, "I/4", DensityMatrix::maximally_mixed(Space({2, 2})), ClassLabel::C, opts);
  expect_label(rec, "isotropic d=2 F=0.8", make_isotropic(IsotropicSpec::from_f(2, 0.8)), ClassLabel::D2, opts);
  expect_label(rec, "isotropic d=3 F=0.5", make_isotropic(IsotropicSpec::from_f(3, 0.5)), ClassLabel::D2, opts);
  expect_label(rec, "isotropic d=3 F=0.3", make_isotropic(IsotropicSpec::from_f(3, 0.3)), ClassLabel::C, opts);

  // Analytic rule against the labels implied by the exact logarithmic values.
  const std::vector<std::tuple<int, int, double>> grid{
      {1, 2, 0.3}, {1, 2, 0.7}, {1, 2, 0.95}, {1, 3, 0.2}, {1, 3, 0.5}, {1, 3, 0.95}, {1, 4, 0.5},
      {1, 4, 0.8}, {1, 5, 0.6}, {1, 5, 0.9}, {1, 6, 0.3}, {1, 6, 0.7}, {2, 2, 0.3}, {2, 2, 0.5},
      {2, 3, 0.5}, {2, 5, 0.5}, {2, 7, 0.9}, {3, 3, 0.6}, {1, 1, 0.4}, {2, 6, 0.95}};
  for (const auto& [m, n, q] : grid) {
    const auto spec = MaxCorrSpec::rank2(m, n, q);
    const auto c = classify_maxcorr(spec, opts);
    const auto expected = m == 1 && n == 1 ? ClassLabel::C : label_from_values(spec);
    rec.check("rank-2 rule (" + std::to_string(m) + "," + std::to_string(n) + "," + format_number(q) + ")",
              c.label == expected, "rule " + label_of(c) + ", values imply " + to_string(expected),
              make_maxcorr(spec));
  }

  // Mixtures that leave a class.
  {
    const Vector psi12 = correlated(6, {0, 1});
    const DensityMatrix plus = mixture(6, {{0.5, psi12}, {0.5, correlated(6, {2, 3, 4, 5}, {1, 1, 1, 1})}});
    const DensityMatrix minus = mixture(6, {{0.5, psi12}, {0.5, correlated(6, {2, 3, 4, 5}, {1, 1, -1, -1})}});
    expect_label(rec, "D1 witness (+)", plus, ClassLabel::D1, opts);
    expect_label(rec, "D1 witness (-)", minus, ClassLabel::D1, opts);
    expect_label(rec, "mixture of the D1 witnesses", average({plus, minus}), ClassLabel::D2, opts);
  }
  {
    const double q = 0.95;
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    std::vector<DensityMatrix> sigmas;
    for (int i = 1; i <= 3; ++i) {
      const Complex a = std::pow(w, i);
      const Complex b = std::pow(w, 2 * i);
      sigmas.push_back(mixture(8, {{q, correlated(8, {0, 1})}, {1.0 - q, correlated(8, {2, 3, 4, 5, 6, 7}, {1, 1, a, a, b, b})}}));
      expect_label(rec, "D3 witness " + std::to_string(i), sigmas.back(), ClassLabel::D3, opts);
    }
    expect_label(rec, "mixture of the D3 witnesses", average(sigmas), ClassLabel::D2, opts);
  }
  {
    const DensityMatrix plus = mixture(4, {{0.5, correlated(4, {0, 1}, {1, 1})}, {0.5, correlated(4, {2, 3}, {1, 1})}});
    const DensityMatrix minus = mixture(4, {{0.5, correlated(4, {0, 1}, {1, -1})}, {0.5, correlated(4, {2, 3}, {1, -1})}});
    expect_label(rec, "D2 witness (+)", plus, ClassLabel::D2, opts);
    expect_label(rec, "D2 witness (-)", minus, ClassLabel::D2, opts);
    expect_label(rec, "mixture of the D2 witnesses", average({plus, minus}), ClassLabel::C, opts);
  }
}

void graph_suite(Recorder& rec, const SuiteOptions& o) {
  const std::vector<std::pair<std::string, GraphSpec>> graphs{
      {"edge", GraphSpec::path(2)}, {"P4 cluster", GraphSpec::path(4)}, {"C4 cluster", GraphSpec::ring(4)},
      {"C6 ring", GraphSpec::ring(6)}};
  for (const auto& [name, g] : graphs) {
    const auto r = verify_universal_css(g, o.opts);
    const double d = static_cast<double>(r.d_alpha);
    const AnyState state = build_graph_state(g);
    rec.close(name + " lambda2 = 1/D", r.lambda2, 1.0 / d, 1e-6, state);
    rec.below(name + " difference spectrum", r.spectrum_error, 1e-10, 0.0, state);
    rec.close(name + " fidelity^2 = 1/D", r.fidelity_squared, 1.0 / d, 1e-10, state);
    rec.close(name + " relative entropy = log2 D", r.relative_entropy, std::log2(d), 1e-9, state);
    rec.close(name + " trace distance = 1 - 1/D", r.trace_distance, 1.0 - 1.0 / d, 1e-10, state);
    rec.below(name + " stabilizer projector agrees", r.projector_error, 1e-10, 0.0, state);
    rec.close(name + " branches are product", r.min_branch_product_overlap, 1.0, 1e-12, state);
  }
  const auto tri = analyze_graph(GraphSpec::ring(3), o.opts);
  rec.check("triangle raises the minimal-rank flag", tri.minimal_rank == false,
            "lambda2 " + format_number(tri.lambda2.value_or(NAN)) + " vs 2^-|beta| " +
                format_number(1.0 / static_cast<double>(tri.d_alpha)),
            build_graph_state(GraphSpec::ring(3)));

  for (int n : {2, 4, 6}) {
    const GraphSpec g = GraphSpec::path(n);
    const auto a = analyze_graph(g, o.opts);
    const PureState psi = build_graph_state(g);
    const auto tet = trace_ent_bracket(psi.projector(), o.opts, {build_delta(g, a).delta});
    const double g_t = 1.0 - *a.lambda2;
    const double expected = std::pow(1.0 - std::pow(2.0, -0.5 * n), 2);
    const std::string name = std::to_string(n) + "-qubit cluster";
    rec.close(name + " bracket upper", tet.upper, expected, 1e-9, psi);
    rec.close(name + " bracket lower", tet.lower, expected, 1e-9, psi);
    rec.check(name + " bracket strictly below G^t", g_t - tet.upper >= 1e-3,
              format_number(tet.upper) + " vs " + format_number(g_t), psi);
  }
}

void appendix_suite(Recorder& rec, const SuiteOptions& o) {
  for (int d = 2; d <= 4; ++d) {
    for (int k = 1; k <= 9; ++k) {
      const double p = k / 10.0;
      const std::string at = "d=" + std::to_string(d) + " p=" + format_number(p);
      const auto rho = make_isotropic(IsotropicSpec::from_p(d, p));
      rec.close("isotropic G^t " + at, gt(rho, o.opts).value, gt_isotropic_closed(d, p), 1e-4, rho);
      const auto c = gt_concavity_counterexample(d, p);
      rec.check("concavity fails " + at, c.violated, format_number(c.lhs) + " < " + format_number(c.rhs));
    }
  }
  const std::vector<FhsSpec> triples{{1, 1, 0.5}, {2, 2, 0.3}, {1, 2, 0.4}, {2, 3, 0.7}, {2, 5, 0.5},
                                     {1, 3, 0.95}, {1, 4, 0.8},  {1, 5, 0.9}, {1, 6, 0.5}, {2, 7, 0.9},
                                     {1, 3, 0.5},  {1, 4, 0.3},  {1, 5, 0.2}, {1, 6, 0.1}, {2, 7, 0.4}};
  bool regime_seen[4] = {false, false, false, false};
  for (const auto& s : triples) {
    const auto closed = fhs_minimum(s);
    const auto grid = fhs_grid_minimum(s);
    regime_seen[closed.regime] = true;
    rec.close("fhs (" + std::to_string(s.m) + "," + std::to_string(s.n) + "," + format_number(s.q) + ") regime " +
                  std::to_string(closed.regime),
              closed.value, grid.value, 2e-4);
  }
  rec.check("fhs triples cover all regimes", regime_seen[1] && regime_seen[2] && regime_seen[3], "");
  const std::vector<std::tuple<int, double, double, double>> logmin{
      {1, 2.0, 1.0, 0.5}, {3, 1.0, 1.0, 1.0}, {4, 3.0, 0.7, 0.0}, {5, 2.5, 0.4, 1.3}};
  for (const auto& [k, n, x, y] : logmin) {
    const auto r = constrained_log_min(k, n, x, y, 10000, o.seed);
    rec.check("constrained log minimum k=" + std::to_string(k) + " n=" + format_number(n), !r.beaten,
              format_number(r.value) + ", best sample " + format_number(r.best_sample));
  }
}

void families_suite(Recorder& rec, const SuiteOptions& o) {
  OptimizerOptions numeric = o.opts;
  numeric.exact_bipartite = false;
  for (int d = 2; d <= 6; ++d) {
    const auto psi = make_mes(d);
    rec.close("MES d=" + std::to_string(d) + " exact", lambda2_pure(psi, o.opts).lambda2, 1.0 / d, 1e-9, psi);
    rec.close("MES d=" + std::to_string(d) + " optimizer", lambda2_pure(psi, numeric).lambda2, 1.0 / d, 1e-9, psi);
  }
  rec.close("GHZ3 lambda2", lambda2_pure(make_ghz(3), o.opts).lambda2, 0.5, 1e-9, make_ghz(3));
  rec.close("W3 lambda2", lambda2_pure(make_w(3), o.opts).lambda2, 4.0 / 9.0, 1e-9, make_w(3));
  rec.close("Dicke(4,2) lambda2", lambda2_pure(make_dicke(4, 2), o.opts).lambda2, 0.375, 1e-9, make_dicke(4, 2));

  const int count = std::max(1, o.samples);
  for (int k = 0; k < count; ++k) {
    const int d = 2 + k % 2;
    const double f = 1.0 / d + (1.0 - 1.0 / d) * (k % 5 + 1) / 6.0;
    const auto spec = IsotropicSpec::from_f(d, f);
    const auto rho = make_isotropic(spec);
    const auto c = iso_closed_forms(spec);
    const std::string at = "d=" + std::to_string(d) + " F=" + format_number(f);
    rec.close("isotropic fidelity extension " + at, fidelity_extension(rho, o.opts).g_f, c.g_fc, 1e-4, rho);
    rec.close("isotropic logarithmic roof " + at, convex_roof(rho, RoofKind::logarithmic, o.opts).value, c.g_fc_log,
              1e-4, rho);
  }
  for (int k = 0; k < count; ++k) {
    auto rng = restart_rng(o.seed ^ 0x7171ULL, static_cast<std::uint64_t>(k));
    const auto rho = random_mixed(Space({2, 2}), rng, 2);
    rec.close("two-qubit logarithmic roof sample " + std::to_string(k),
              convex_roof(rho, RoofKind::logarithmic, o.opts).value, two_qubit_closed_forms(rho).g_c_log, 1e-4, rho);
  }
  const std::vector<std::pair<int, int>> blocks{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}};
  for (int k = 0; k < count; ++k) {
    const auto [m, n] = blocks[static_cast<std::size_t>(k) % blocks.size()];
    const double q = 0.1 + 0.1 * ((k * 3) % 9);
    const auto rho = make_maxcorr(MaxCorrSpec::rank2(m, n, q));
    rec.close("rank-2 logarithmic roof (" + std::to_string(m) + "," + std::to_string(n) + "," + format_number(q) + ")",
              convex_roof(rho, RoofKind::logarithmic, o.opts).value, rank2_log_roof(m, n, q).value, 1e-4, rho);
  }
}

}  // namespace

SuiteResult run_suite(const std::string& suite, const SuiteOptions& options) {
  SuiteResult r;
  r.suite = suite;
  Recorder rec(r);
  if (suite == "hierarchy") {
    hierarchy_suite(rec, options);
  } else if (suite == "partition") {
    partition_suite(rec, options);
  } else if (suite == "graph") {
    graph_suite(rec, options);
  } else if (suite == "appendix") {
    appendix_suite(rec, options);
  } else if (suite == "families") {
    families_suite(rec, options);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return r;
}

SuiteResult run_incomparability(const OptimizerOptions& opts) {
  SuiteResult r;
  r.suite = "incomparability";
  Recorder rec(r);

  // Mixed separable state: lower bounds from the largest eigenvalue, upper bounds from a roof certificate.
  const DensityMatrix sep = mixture(2, {{0.5, correlated(2, {0})}, {0.5, correlated(2, {1})}});
  const double top = hermitian_eigen(sep.matrix()).values.maxCoeff();
  const double gm_sep_lower = 1.0 - top;
  const double gt_sep_lower = (1.0 - top) * (1.0 - top);
  const auto lin_sep = convex_roof(sep, RoofKind::linear, opts);
  const auto log_sep = convex_roof(sep, RoofKind::logarithmic, opts);
  const double gfl_sep_upper = -std::log2(1.0 - lin_sep.value);

  const PureState bell = make_mes(2);
  const auto bell_gm = gm_pure(bell, opts);  // exact: two parties

  rec.check("separable: G^m > G^c_l", gm_sep_lower > log_sep.value + 1e-9,
            "G^m >= " + format_number(gm_sep_lower) + ", G^c_l <= " + format_number(log_sep.value), sep);
  rec.check("pure entangled: G^m < G^c_l", bell_gm.g < bell_gm.g_log - 1e-9,
            format_number(bell_gm.g) + " < " + format_number(bell_gm.g_log), bell);
  rec.check("separable: G^m > G^f_l", gm_sep_lower > gfl_sep_upper + 1e-9,
            "G^m >= " + format_number(gm_sep_lower) + ", G^f_l <= " + format_number(gfl_sep_upper), sep);
  rec.check("pure entangled: G^m < G^f_l", bell_gm.g < bell_gm.g_log - 1e-9,
            format_number(bell_gm.g) + " < " + format_number(bell_gm.g_log), bell);
  rec.check("separable: G^t > G^c_l", gt_sep_lower > log_sep.value + 1e-9,
            "G^t >= " + format_number(gt_sep_lower) + ", G^c_l <= " + format_number(log_sep.value), sep);
  rec.check("separable: G^t > G^f_l", gt_sep_lower > gfl_sep_upper + 1e-9,
            "G^t >= " + format_number(gt_sep_lower) + ", G^f_l <= " + format_number(gfl_sep_upper), sep);
  rec.check("pure entangled: G^t < G^c_l and G^f_l", bell_gm.g < bell_gm.g_log - 1e-9,
            "G^t = G = " + format_number(bell_gm.g) + " < " + format_number(bell_gm.g_log), bell);
  rec.check("separable: G^t > G^f/c", gt_sep_lower > lin_sep.value + 1e-9,
            "G^t >= " + format_number(gt_sep_lower) + ", G^f/c <= " + format_number(lin_sep.value), sep);

  // Two qutrits, q|00><00| + (1-q)|Psi_12><Psi_12| with q = 3/4.
  {
    const double q = 0.75;
    const MaxCorrSpec spec{3, {0, 1, 3}, {q, 1.0 - q}};
    const DensityMatrix rho = make_maxcorr(spec);
    Vector e0 = Vector::Zero(3);
    e0(0) = 1.0;
    const double gt_upper = gt_objective(rho, ProductState({e0, e0}));
    const double gfc = maxcorr_closed_forms(spec).g_c;
    const double gfc_roof = fidelity_extension(rho, opts).g_f;
    rec.close("two-qutrit G^t certificate at |00>", gt_upper, (1.0 - q) * (1.0 - q), 1e-12, rho);
    rec.close("two-qutrit G^f/c closed form", gfc, (1.0 - q) / 2.0, 1e-12, rho);
    rec.below("two-qutrit G^f/c closed form <= roof certificate", gfc, gfc_roof, kHierarchySlack, rho);
    rec.check("two-qutrit: G^t < G^f/c", gt_upper < gfc - 1e-9,
              "G^t <= " + format_number(gt_upper) + " < G^f/c = " + format_number(gfc), rho);
  }

  // Six-level pair with equal linear values and opposite logarithmic order.
  {
    const MaxCorrSpec a{6, {0, 3, 6}, {0.5, 0.5}};
    const MaxCorrSpec b = MaxCorrSpec::rank2(2, 4, 1.0 / 3.0);
    const auto ca = maxcorr_closed_forms(a);
    const auto cb = maxcorr_closed_forms(b);
    const double roof_a = convex_roof(make_maxcorr(a), RoofKind::logarithmic, opts).value;
    rec.close("six-level pair: G^f/c equal at 2/3 (first)", ca.g_c, 2.0 / 3.0, 1e-12, make_maxcorr(a));
    rec.close("six-level pair: G^f/c equal at 2/3 (second)", cb.g_c, 2.0 / 3.0, 1e-12, make_maxcorr(b));
    rec.close("six-level pair: G^c_l first = log2 3", *ca.g_c_log, std::log2(3.0), 1e-12, make_maxcorr(a));
    rec.close("six-level pair: G^c_l second = 5/3", *cb.g_c_log, 5.0 / 3.0, 1e-12, make_maxcorr(b));
    rec.check("six-level pair: G^c_l(first) < G^c_l(second)", roof_a < *cb.g_c_log - 1e-9,
              "roof certificate " + format_number(roof_a) + " < " + format_number(*cb.g_c_log), make_maxcorr(a));
  }
  return r;
}

void dump_reproducers(SuiteResult& result, const std::string& directory) {
  namespace fs = std::filesystem;
  int index = 0;
  for (const auto& c : result.checks) {
    if (c.pass || !c.reproducer) continue;
    fs::create_directories(directory);
    const std::string path =
        (fs::path(directory) / (result.suite + "-failure-" + std::to_string(index++) + ".json")).string();
    write_state_file(path, *c.reproducer);
    result.reproducer_files.push_back(path);
  }
}

std::string render_suite(const SuiteResult& result, OutputFormat format) {
  std::ostringstream out;
  for (const auto& c : result.checks) {
    if (format == OutputFormat::machine) {
      out << (c.pass ? "pass" : "fail") << '\t' << result.suite << '\t' << c.name << '\t' << c.detail << '\n';
    } else {
      out << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
  }
  for (const auto& f : result.reproducer_files) out << "reproducer written to " << f << '\n';
  out << "RESULT pass=" << result.passed() << " fail=" << result.failed() << '\n';
  return out.str();
}

}  // namespace gme
