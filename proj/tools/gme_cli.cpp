#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gme/appendix.hpp"
#include "gme/classify.hpp"
#include "gme/convex_roof.hpp"
#include "gme/families.hpp"
#include "gme/graph_gm.hpp"
#include "gme/mixed_gm.hpp"
#include "gme/pure_gm.hpp"
#include "gme/report.hpp"
#include "gme/state_io.hpp"
#include "gme/trace_entanglement.hpp"
#include "gme/verify.hpp"
#include "json.hpp"

namespace {

using namespace gme;
using nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitHierarchy = 4;

// Ordered key/value output rendered as aligned text or as JSON.
class Fields {
 public:
  void num(const std::string& key, double v) { items_.emplace_back(key, number(v)); }
  void text(const std::string& key, const std::string& v) { items_.emplace_back(key, v); }
  void flag(const std::string& key, bool v) { items_.emplace_back(key, v); }
  void integer(const std::string& key, long long v) { items_.emplace_back(key, v); }
  void raw(const std::string& key, ordered_json v) { items_.emplace_back(key, std::move(v)); }

  [[nodiscard]] std::string render(OutputFormat format) const {
    if (format == OutputFormat::machine) {
      ordered_json doc = ordered_json::object();
      for (const auto& [k, v] : items_) doc[k] = v;
      return doc.dump(2) + "\n";
    }
    std::size_t width = 0;
    for (const auto& [k, v] : items_) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : items_) {
      out << k << std::string(width - k.size() + 2, ' ') << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return out.str();
  }

  static ordered_json number(double v) {
    if (!std::isfinite(v)) return format_number(v);
    return ordered_json::parse(format_number(v));
  }

 private:
  std::vector<std::pair<std::string, ordered_json>> items_;
};

ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back({Fields::number(v(i).real()), Fields::number(v(i).imag())});
  return out;
}

ordered_json product_json(const ProductState& p) {
  ordered_json out = ordered_json::array();
  for (const auto& f : p.factors()) out.push_back(vector_json(f));
  return out;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

struct Globals {
  OptimizerOptions opts;
  std::string format = "text";
  [[nodiscard]] OutputFormat output() const { return format == "machine" ? OutputFormat::machine : OutputFormat::text; }
};

PureState pure_of(const AnyState& s) {
  if (const auto* psi = std::get_if<PureState>(&s)) return *psi;
  const auto& rho = std::get<DensityMatrix>(s);
  if (!rho.is_pure()) throw std::invalid_argument("this command needs a pure state");
  const auto eig = hermitian_eigen(rho.matrix());
  return PureState::normalized(rho.space(), eig.vectors.col(eig.values.size() - 1));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric measures of entanglement for dense multipartite states"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.opts.seed, "Base seed for every randomized search")->capture_default_str();
  app.add_option("--restarts", g.opts.restarts, "Random restarts of the product-state search")->capture_default_str();
  app.add_option("--max-sweeps", g.opts.max_sweeps, "Sweep cap per restart")->capture_default_str();
  app.add_option("--tol", g.opts.tol, "Convergence tolerance")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();

  int status = 0;
  auto emit = [&](const Fields& f) { std::cout << f.render(g.output()); };

  std::string state_file;
  auto* pure = app.add_subcommand("pure", "Closest product state of a pure state");
  pure->add_option("state", state_file, "State file")->required();
  pure->callback([&] {
    const PureState psi = pure_of(read_state_file(state_file));
    const auto r = lambda2_pure(psi, g.opts);
    const auto gm = gm_from_lambda2(r.lambda2);
    Fields f;
    f.num("lambda2", r.lambda2);
    f.num("G", gm.g);
    f.num("G_l", gm.g_log);
    f.text("certificate", psi.space().parties() == 2 && g.opts.exact_bipartite ? "exact" : "lower-bound on lambda2");
    f.flag("converged", r.converged);
    f.raw("cps", product_json(r.cps));
    emit(f);
  });

  auto* lm = app.add_subcommand("lambda-m", "Trace-inner-product extension");
  lm->add_option("state", state_file, "State file")->required();
  lm->callback([&] {
    const DensityMatrix rho = as_density(read_state_file(state_file));
    const auto r = lambda2_mixed(rho, g.opts);
    Fields f;
    f.num("lambda2m", r.lambda2m);
    f.num("G^m", 1.0 - r.lambda2m);
    f.num("G^m_l", -std::log2(r.lambda2m));
    f.text("certificate", "lower-bound on lambda2m");
    f.flag("converged", r.converged);
    f.raw("cps", product_json(r.cps));
    emit(f);
  });

  auto* gtc = app.add_subcommand("gt", "Squared trace distance to the nearest pure product state");
  gtc->add_option("state", state_file, "State file")->required();
  gtc->callback([&] {
    const DensityMatrix rho = as_density(read_state_file(state_file));
    const auto r = gt(rho, g.opts);
    Fields f;
    f.num("G^t", r.value);
    f.text("certificate", "upper-bound");
    f.num("recomputed", gt_objective(rho, r.cps));
    f.flag("converged", r.converged);
    f.raw("cps", product_json(r.cps));
    emit(f);
  });

  std::string witness_out;
  auto* tet = app.add_subcommand("tet-bracket", "Bracket on the squared trace distance to the separable set");
  tet->add_option("state", state_file, "State file")->required();
  tet->add_option("--witness-out", witness_out, "Write the separable witness to this file");
  tet->callback([&] {
    const DensityMatrix rho = as_density(read_state_file(state_file));
    const auto r = trace_ent_bracket(rho, g.opts);
    Fields f;
    f.num("lower", r.lower);
    f.num("upper", r.upper);
    f.flag("lower_certified", r.lower_certified);
    f.text("witness", r.witness_kind);
    if (!witness_out.empty()) {
      write_state_file(witness_out, r.witness_upper);
      f.text("witness_file", witness_out);
    }
    emit(f);
  });

  std::string roof_kind = "linear";
  auto* roof = app.add_subcommand("roof", "Convex-roof upper bound with its decomposition");
  roof->add_option("state", state_file, "State file")->required();
  roof->add_option("--kind", roof_kind, "Pure-state measure")->check(CLI::IsMember({"linear", "log"}))->capture_default_str();
  roof->callback([&] {
    const DensityMatrix rho = as_density(read_state_file(state_file));
    const auto r = convex_roof(rho, roof_kind == "log" ? RoofKind::logarithmic : RoofKind::linear, g.opts);
    Fields f;
    f.num(roof_kind == "log" ? "G^c_l" : "G^c", r.value);
    f.text("certificate", "upper-bound");
    f.integer("members", static_cast<long long>(r.decomposition.size()));
    f.num("reconstruction_error", r.decomposition.reconstruction_error(rho));
    ordered_json members = ordered_json::array();
    for (std::size_t i = 0; i < r.decomposition.size(); ++i) {
      members.push_back({{"p", Fields::number(r.decomposition.members()[i].p)},
                         {"lambda2", Fields::number(r.per_member_lambda2[i])}});
    }
    f.raw("decomposition", members);
    f.flag("converged", r.converged);
    for (const auto& w : r.warnings) f.text("warning", w);
    emit(f);
  });

  std::string css_out;
  auto* fe = app.add_subcommand("fidelity-ext", "Fidelity extension with its separable state");
  fe->add_option("state", state_file, "State file")->required();
  fe->add_option("--css-out", css_out, "Write the separable state to this file");
  fe->callback([&] {
    const DensityMatrix rho = as_density(read_state_file(state_file));
    const auto r = fidelity_extension(rho, g.opts);
    Fields f;
    f.num("G^f", r.g_f);
    f.num("G^f_l", r.g_f_log);
    f.num("lambda2f", r.lambda2f);
    f.num("css_fidelity", r.css_fidelity);
    f.text("certificate", "upper-bound");
    if (!css_out.empty()) {
      write_state_file(css_out, r.css);
      f.text("css_file", css_out);
    }
    emit(f);
  });

  std::string phi_file;
  auto* eq = app.add_subcommand("equal-overlap", "Decomposition whose members share the overlap with phi");
  eq->add_option("state", state_file, "State file")->required();
  eq->add_option("--phi", phi_file, "Pure state file for phi")->required();
  eq->callback([&] {
    const DensityMatrix rho = as_density(read_state_file(state_file));
    const PureState phi = pure_of(read_state_file(phi_file));
    const auto d = equal_overlap_decomposition(rho, phi);
    const double target = phi.amplitudes().dot(rho.matrix() * phi.amplitudes()).real();
    double worst = 0.0;
    for (const auto& m : d.members()) worst = std::max(worst, std::abs(std::norm(phi.amplitudes().dot(m.psi.amplitudes())) - target));
    Fields f;
    f.num("overlap", target);
    f.integer("members", static_cast<long long>(d.size()));
    f.num("max_overlap_deviation", worst);
    f.num("reconstruction_error", d.reconstruction_error(rho));
    emit(f);
  });

  std::string family;
  int fd = 2;
  int fn = 3;
  int fk = 1;
  std::optional<double> fp;
  std::optional<double> ff;
  std::string partition;
  std::string weights;
  std::string out_file;
  auto* fam = app.add_subcommand("family", "Write a named family state as a state file");
  fam->add_option("name", family, "Family")->required()->check(CLI::IsMember({"iso", "maxcorr", "mes", "ghz", "w", "dicke"}));
  fam->add_option("--d", fd, "Local dimension")->capture_default_str();
  fam->add_option("--n", fn, "Number of parties")->capture_default_str();
  fam->add_option("--k", fk, "Excitations (dicke)")->capture_default_str();
  fam->add_option("--p", fp, "Noise weight (iso)");
  fam->add_option("--F", ff, "Overlap with the maximally entangled state (iso)");
  fam->add_option("--partition", partition, "Block boundaries, e.g. 0,1,4 (maxcorr)");
  fam->add_option("--weights", weights, "Block weights, e.g. 0.5,0.5 (maxcorr)");
  fam->add_option("--out", out_file, "Output file (default: standard output)");
  fam->callback([&] {
    std::optional<AnyState> s;
    if (family == "iso") {
      if (fp.has_value() == ff.has_value()) throw std::invalid_argument("iso needs exactly one of --p and --F");
      s = make_isotropic(fp ? IsotropicSpec::from_p(fd, *fp) : IsotropicSpec::from_f(fd, *ff));
    } else if (family == "maxcorr") {
      MaxCorrSpec spec;
      for (double b : parse_list(partition)) spec.partition.push_back(static_cast<int>(b));
      spec.weights = parse_list(weights);
      if (spec.partition.empty()) throw std::invalid_argument("maxcorr needs --partition");
      spec.d = spec.partition.back();
      s = make_maxcorr(spec);
    } else if (family == "mes") {
      s = make_mes(fd);
    } else if (family == "ghz") {
      s = make_ghz(fn, fd);
    } else if (family == "w") {
      s = make_w(fn);
    } else {
      s = make_dicke(fn, fk);
    }
    if (out_file.empty()) {
      std::cout << serialize_state(*s);
    } else {
      write_state_file(out_file, *s);
    }
  });

  auto* cls = app.add_subcommand("classify", "Partition label with its evidence");
  cls->add_option("state", state_file, "State file")->required();
  cls->callback([&] {
    const auto c = classify(as_density(read_state_file(state_file)), g.opts);
    Fields f;
    f.text("label", c.label ? to_string(*c.label) : "undecided");
    f.text("path", c.evidence.path);
    f.num("purity", c.evidence.purity);
    if (c.evidence.g_f_log) f.num("G^f_l", *c.evidence.g_f_log);
    if (c.evidence.g_c_log) f.num("G^c_l", *c.evidence.g_c_log);
    if (c.evidence.g_m_log) f.num("G^m_l", *c.evidence.g_m_log);
    ordered_json notes = ordered_json::array();
    for (const auto& n : c.evidence.notes) notes.push_back(n);
    f.raw("notes", notes);
    emit(f);
  });

  std::string edges;
  int cluster = 0;
  int ring = 0;
  int vertices = 0;
  bool graph_verify = false;
  std::string delta_out;
  auto* gr = app.add_subcommand("graph", "Graph-state product decomposition and its separable state");
  auto* edges_opt = gr->add_option("--edges", edges, "Edge list such as 0-1,1-2");
  auto* cluster_opt = gr->add_option("--cluster", cluster, "Linear cluster on n vertices");
  auto* ring_opt = gr->add_option("--ring", ring, "Ring on n vertices");
  edges_opt->excludes(cluster_opt)->excludes(ring_opt);
  cluster_opt->excludes(ring_opt);
  gr->add_option("--vertices", vertices, "Vertex count for --edges (default: largest label + 1)");
  gr->add_flag("--verify", graph_verify, "Check the separable-state identities");
  gr->add_option("--delta-out", delta_out, "Write the separable state to this file");
  gr->callback([&] {
    const GraphSpec spec = cluster > 0 ? GraphSpec::path(cluster)
                           : ring > 0  ? GraphSpec::ring(ring)
                                       : GraphSpec::parse(edges, vertices);
    const auto a = analyze_graph(spec, g.opts);
    Fields f;
    f.raw("alpha", a.alpha);
    f.raw("beta", a.beta);
    f.integer("D_alpha", a.d_alpha);
    if (a.lambda2) f.num("lambda2", *a.lambda2);
    if (a.minimal_rank) f.flag("minimal_rank", *a.minimal_rank);
    if (graph_verify) {
      const auto r = verify_universal_css(spec, g.opts);
      f.num("trace_distance", r.trace_distance);
      f.num("fidelity_squared", r.fidelity_squared);
      f.num("relative_entropy", r.relative_entropy);
      ordered_json spec_json = ordered_json::array();
      for (double v : r.difference_spectrum) spec_json.push_back(Fields::number(v));
      f.raw("difference_spectrum", spec_json);
      f.num("spectrum_error", r.spectrum_error);
      f.num("projector_error", r.projector_error);
      f.num("min_branch_product_overlap", r.min_branch_product_overlap);
      f.flag("bounds_only", r.bounds_only);
    }
    if (!delta_out.empty()) {
      write_state_file(delta_out, build_delta(spec, a).delta);
      f.text("delta_file", delta_out);
    }
    emit(f);
  });

  auto* apx = app.add_subcommand("appendix", "Closed-form checks on isotropic states and constrained minima");
  apx->require_subcommand(1);
  int ad = 2;
  double ap = 0.5;
  auto* gt_iso = apx->add_subcommand("gt-iso", "G^t of the isotropic state");
  gt_iso->add_option("--d", ad, "Local dimension")->required();
  gt_iso->add_option("--p", ap, "Noise weight")->required();
  gt_iso->callback([&] {
    Fields f;
    f.num("closed_form", gt_isotropic_closed(ad, ap));
    f.num("optimizer", gt(make_isotropic(IsotropicSpec::from_p(ad, ap)), g.opts).value);
    if (ap > 0.0 && ap < 1.0) {
      const auto c = gt_concavity_counterexample(ad, ap);
      f.num("mixture_of_endpoints", c.rhs);
      f.flag("concavity_violated", c.violated);
    }
    emit(f);
  });
  FhsSpec fs;
  auto* fhs = apx->add_subcommand("fhs", "Minimum of the two-parameter decomposition objective");
  fhs->add_option("--m", fs.m, "Smaller block")->required();
  fhs->add_option("--n", fs.n, "Larger block")->required();
  fhs->add_option("--q", fs.q, "Weight of the smaller block")->required();
  int grid_points = 0;
  fhs->add_option("--grid", grid_points, "Also run a grid search with this many points per axis");
  fhs->callback([&] {
    const auto r = fhs_minimum(fs);
    Fields f;
    f.num("value", r.value);
    f.num("h", r.h);
    f.num("s", r.s);
    f.integer("regime", r.regime);
    if (grid_points > 0) {
      const auto gm = fhs_grid_minimum(fs, grid_points);
      f.num("grid_value", gm.value);
      f.num("grid_h", gm.h);
      f.num("grid_s", gm.s);
    }
    emit(f);
  });
  int lk = 1;
  double ln = 1.0;
  double lx = 1.0;
  double ly = 0.0;
  auto* logmin = apx->add_subcommand("logmin", "Constrained logarithmic minimum with random feasible sampling");
  logmin->add_option("--k", lk, "Number of terms")->required();
  logmin->add_option("--n", ln, "Constant inside the logarithm")->required();
  logmin->add_option("--X", lx, "Sum of the x_i")->required();
  logmin->add_option("--Y", ly, "Sum of the y_i")->required();
  logmin->callback([&] {
    const auto r = constrained_log_min(lk, ln, lx, ly, 10000, g.opts.seed);
    Fields f;
    f.num("value", r.value);
    f.num("best_sample", r.best_sample);
    f.flag("beaten", r.beaten);
    emit(f);
    if (r.beaten) status = kExitFailure;
  });

  std::string suite;
  SuiteOptions suite_opts;
  std::string dump_dir = ".";
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite, "Suite")->required()->check(
      CLI::IsMember({"hierarchy", "partition", "graph", "appendix", "families"}));
  ver->add_option("--samples", suite_opts.samples, "Random states per sampled space")->capture_default_str();
  ver->add_option("--seed", g.opts.seed, "Base seed");
  ver->add_option("--dump-dir", dump_dir, "Directory for failure reproducers")->capture_default_str();
  ver->callback([&] {
    suite_opts.opts = g.opts;
    suite_opts.seed = g.opts.seed;
    auto r = run_suite(suite, suite_opts);
    dump_reproducers(r, dump_dir);
    std::cout << render_suite(r, g.output());
    if (r.failed() > 0) status = kExitFailure;
  });

  std::string certs_dir;
  bool skip_log_roof = false;
  auto* rep = app.add_subcommand("report", "All measures with certificates and hierarchy checks");
  rep->add_option("state", state_file, "State file")->required();
  rep->add_option("--dump-certs", certs_dir, "Write the certificates into this directory");
  rep->add_flag("--no-log-roof", skip_log_roof, "Bound the logarithmic roof by the linear decomposition only");
  rep->callback([&] {
    const auto r = build_report(read_state_file(state_file), g.opts, {!skip_log_roof});
    std::cout << render_report(r, g.output());
    if (!certs_dir.empty()) dump_certificates(r, certs_dir);
    if (!r.hierarchy_ok()) {
      std::cerr << render_violations(r);
      status = kExitHierarchy;
    }
  });

  auto* inc = app.add_subcommand("incomparability", "Sign patterns between measures without a general inequality");
  inc->callback([&] {
    const auto r = run_incomparability(g.opts);
    std::cout << render_suite(r, g.output());
    if (r.failed() > 0) status = kExitFailure;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const StateParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::length_error& e) {
    std::cerr << "error: dimension budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return status;
}
