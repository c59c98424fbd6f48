#include "gme/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gme/appendix.hpp"
#include "gme/classify.hpp"
#include "gme/families.hpp"
#include "gme/mixed_gm.hpp"
#include "gme/trace_entanglement.hpp"
#include "json.hpp"

namespace gme {

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::exact: return "exact";
    case CertificateKind::lower_bound: return "lower-bound";
    case CertificateKind::upper_bound: return "upper-bound";
    case CertificateKind::bracket: return "bracket";
  }
  return "?";
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

bool MeasureReport::hierarchy_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const HierarchyCheck& c) { return c.ok; });
}

const MeasureEntry* MeasureReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

double MeasureReport::max_recomputation_error() const {
  double worst = 0.0;
  for (const auto& e : entries) {
    if (!e.recomputed) continue;
    // A closed-form value keeps its optimizer number; the witness backs that one.
    double target = e.kind == CertificateKind::bracket ? *e.upper : e.value;
    if (e.optimizer_value) target = *e.optimizer_value;
    if (std::isinf(target) && std::isinf(*e.recomputed)) continue;
    worst = std::max(worst, std::abs(*e.recomputed - target));
  }
  return worst;
}

namespace {

double overlap2(const Vector& a, const Vector& b) { return std::norm(a.dot(b)); }

double safe_log_gm(double lambda2) { return lambda2 > 0.0 ? -std::log2(lambda2) : std::numeric_limits<double>::infinity(); }

class Builder {
 public:
  explicit Builder(MeasureReport& r) : r_(r) {}

  MeasureEntry& add(std::string name, double value, CertificateKind kind, std::string provenance,
                    std::string certificate = {}) {
    MeasureEntry e;
    e.name = std::move(name);
    e.value = value;
    e.kind = kind;
    e.provenance = std::move(provenance);
    e.certificate = std::move(certificate);
    r_.entries.push_back(std::move(e));
    return r_.entries.back();
  }

  MeasureEntry& at(const std::string& name) {
    for (auto& e : r_.entries) {
      if (e.name == name) return e;
    }
    throw std::logic_error("no report entry " + name);
  }

  void override_exact(const std::string& name, double value, const std::string& source) {
    auto& e = at(name);
    e.optimizer_value = e.value;
    e.value = value;
    e.kind = CertificateKind::exact;
    e.provenance = "closed form (" + source + ")";
  }

  void check(const std::string& relation, const std::string& lhs_name, double lhs, const std::string& rhs_name,
             double rhs, double slack) {
    HierarchyCheck c{relation, lhs_name, rhs_name, lhs, rhs, slack, lhs <= rhs + slack};
    r_.checks.push_back(std::move(c));
  }

  void check(const std::string& lhs, const std::string& rhs, double slack) {
    const MeasureEntry* a = r_.find(lhs);
    const MeasureEntry* b = r_.find(rhs);
    if (a == nullptr || b == nullptr) return;
    check(lhs + " <= " + rhs, lhs, a->value, rhs, b->value, slack);
  }

 private:
  MeasureReport& r_;
};

void pure_entries(MeasureReport& r, Builder& b, const PureState& psi, const OptimizerOptions& opts) {
  const auto l = lambda2_pure(psi, opts);
  const bool exact = psi.space().parties() == 2 && opts.exact_bipartite;
  const auto kind = exact ? CertificateKind::exact : CertificateKind::upper_bound;
  const std::string prov = exact ? "singular value decomposition" : "optimizer";
  const double g = 1.0 - l.lambda2;
  const double gl = safe_log_gm(l.lambda2);
  const double recomputed = 1.0 - overlap2(l.cps.vector(), psi.amplitudes());
  const DensityMatrix rho = psi.projector();

  for (const char* name : {"G^f/c", "G^f", "G^c", "G^m"}) {
    b.add(name, g, kind, prov, "closest product state").recomputed = recomputed;
  }
  for (const char* name : {"G^f_l", "G^c_l", "G^m_l"}) {
    b.add(name, gl, kind, prov, "closest product state").recomputed = safe_log_gm(1.0 - recomputed);
  }
  b.add("G^t", g, kind, prov, "closest product state").recomputed = gt_objective(rho, l.cps);
  r.certificates["closest product state"].product = l.cps;

  const auto tet = trace_ent_bracket(rho, opts);
  auto& e = b.add("E_T", tet.lower, CertificateKind::bracket, tet.witness_kind, "trace-distance separable witness");
  e.upper = tet.upper;
  const double td = trace_distance(rho, tet.witness_upper);
  e.recomputed = td * td;
  if (!tet.lower_certified) e.provenance += "; lower end from an optimizer product state";
  r.certificates["trace-distance separable witness"].separable = tet.witness_upper;

  const auto reduced = partial_trace(rho, std::vector<int>{0});
  b.add("S", 0.0, CertificateKind::exact, "spectrum");
  b.add("S_lin", 0.0, CertificateKind::exact, "spectrum");
  if (psi.space().parties() == 2) b.add("S(rho_A)", entropies(reduced).von_neumann, CertificateKind::exact, "spectrum");
}

void mixed_entries(MeasureReport& r, Builder& b, const DensityMatrix& rho, const OptimizerOptions& opts,
                   const ReportOptions& ropts) {
  const auto lm = lambda2_mixed(rho, opts);
  const double lam_m = lm.cps.vector().dot(rho.matrix() * lm.cps.vector()).real();
  r.certificates["trace-inner-product product state"].product = lm.cps;

  const auto fid = fidelity_extension(rho, opts);
  std::optional<RoofResult> lg;
  if (ropts.log_roof) lg = convex_roof(rho, RoofKind::logarithmic, opts);

  // Each decomposition bounds both roofs; keep the better one per roof.
  const RoofResult* lin_src = &fid.roof;
  double g_c = fid.roof.value;
  const RoofResult* log_src = &fid.roof;
  double g_c_log = roof_value(fid.roof.decomposition, fid.roof.per_member_lambda2, RoofKind::logarithmic);
  if (lg) {
    const double cross = roof_value(lg->decomposition, lg->per_member_lambda2, RoofKind::linear);
    if (cross < g_c) {
      g_c = cross;
      lin_src = &*lg;
    }
    if (lg->value < g_c_log) {
      g_c_log = lg->value;
      log_src = &*lg;
    }
  }
  auto store_decomposition = [&](const std::string& key, const RoofResult& src) {
    auto& c = r.certificates[key];
    c.decomposition = src.decomposition;
    c.member_products = src.per_member_cps;
  };
  auto recompute_roof = [](const RoofResult& src, RoofKind kind) {
    std::vector<double> l2;
    for (std::size_t i = 0; i < src.decomposition.size(); ++i) {
      l2.push_back(overlap2(src.per_member_cps[i].vector(), src.decomposition.members()[i].psi.amplitudes()));
    }
    return roof_value(src.decomposition, l2, kind);
  };
  store_decomposition("linear roof decomposition", *lin_src);
  store_decomposition("logarithmic roof decomposition", *log_src);
  r.certificates["fidelity separable state"].separable = fid.css;

  const double g_f = 1.0 - fid.css_fidelity * fid.css_fidelity;
  const double g_fc = std::min(g_c, g_f);
  const bool via_css = g_f < g_c;

  const std::string fc_witness = via_css ? "fidelity separable state" : "linear roof decomposition";
  const double css_g = 1.0 - std::pow(fidelity(rho, fid.css), 2);
  const double roof_g = recompute_roof(*lin_src, RoofKind::linear);
  const double fc_recomputed = via_css ? css_g : roof_g;
  b.add("G^f/c", g_fc, CertificateKind::upper_bound, "optimizer", fc_witness).recomputed = fc_recomputed;
  b.add("G^f", g_f, CertificateKind::upper_bound, "optimizer", "fidelity separable state").recomputed = css_g;
  b.add("G^c", g_c, CertificateKind::upper_bound, "optimizer", "linear roof decomposition").recomputed = roof_g;
  b.add("G^f_l", -std::log2(1.0 - g_fc), CertificateKind::upper_bound, "optimizer", fc_witness).recomputed =
      -std::log2(1.0 - fc_recomputed);
  b.add("G^c_l", g_c_log, CertificateKind::upper_bound, lg ? "optimizer" : "optimizer (linear roof decomposition)",
        "logarithmic roof decomposition")
      .recomputed = recompute_roof(*log_src, RoofKind::logarithmic);
  b.add("G^m", 1.0 - lm.lambda2m, CertificateKind::upper_bound, "optimizer", "trace-inner-product product state")
      .recomputed = 1.0 - lam_m;
  b.add("G^m_l", safe_log_gm(lm.lambda2m), CertificateKind::upper_bound, "optimizer",
        "trace-inner-product product state")
      .recomputed = safe_log_gm(lam_m);

  const auto t = gt(rho, opts);
  b.add("G^t", t.value, CertificateKind::upper_bound, "optimizer", "trace-distance product state").recomputed =
      gt_objective(rho, t.cps);
  r.certificates["trace-distance product state"].product = t.cps;

  const auto tet = trace_ent_bracket(rho, opts, {}, &fid);
  auto& e = b.add("E_T", tet.lower, CertificateKind::bracket, tet.witness_kind, "trace-distance separable witness");
  e.upper = tet.upper;
  const double td = trace_distance(rho, tet.witness_upper);
  e.recomputed = td * td;
  r.certificates["trace-distance separable witness"].separable = tet.witness_upper;

  const auto ent = entropies(rho);
  b.add("S", ent.von_neumann, CertificateKind::exact, "spectrum");
  b.add("S_lin", ent.linear, CertificateKind::exact, "spectrum");
  const double er_css = relative_entropy(rho, fid.css);
  const double er_tet = relative_entropy(rho, tet.witness_upper);
  const bool er_from_css = er_css <= er_tet;
  b.add("E_R", std::min(er_css, er_tet), CertificateKind::upper_bound, "relative entropy to a separable witness",
        er_from_css ? "fidelity separable state" : "trace-distance separable witness")
      .recomputed = er_from_css ? relative_entropy(rho, fid.css) : relative_entropy(rho, tet.witness_upper);

  // Closed forms replace the optimizer numbers; the optimizer bound must stay above them.
  auto closed = [&](const std::string& name, double value, const std::string& source) {
    b.override_exact(name, value, source);
    const auto& entry = b.at(name);
    b.check(name + " closed form <= optimizer bound", name, entry.value, name + " (optimizer)", *entry.optimizer_value,
            kHierarchySlack);
  };
  if (const auto iso = recognize_isotropic(rho)) {
    const auto c = iso_closed_forms(*iso);
    const std::string src = "isotropic";
    for (const char* n : {"G^f/c", "G^f", "G^c"}) closed(n, c.g_fc, src);
    for (const char* n : {"G^f_l", "G^c_l"}) closed(n, c.g_fc_log, src);
    closed("G^m", c.g_m, src);
    closed("G^m_l", c.g_m_log, src);
    closed("G^t", gt_isotropic_closed(iso->d(), iso->p()), src);
  } else if (const auto mc = recognize_maxcorr(rho)) {
    const auto c = maxcorr_closed_forms(*mc);
    const std::string src = "maximally correlated";
    for (const char* n : {"G^f/c", "G^f", "G^c"}) closed(n, c.g_c, src);
    closed("G^f_l", c.g_f_log, src);
    if (c.g_c_log) closed("G^c_l", *c.g_c_log, src + ", " + c.g_c_log_source);
    closed("G^m", c.g_m, src);
    closed("G^m_l", c.g_m_log, src);
  } else if (rho.space() == Space({2, 2})) {
    const auto c = two_qubit_closed_forms(rho);
    const std::string src = "concurrence";
    for (const char* n : {"G^f/c", "G^f", "G^c"}) closed(n, c.g_c, src);
    closed("G^f_l", -std::log2(1.0 - c.g_c), src);
    closed("G^c_l", c.g_c_log, src);
  }
}

}  // namespace

MeasureReport build_report(const AnyState& state, const OptimizerOptions& opts, const ReportOptions& ropts) {
  MeasureReport r;
  r.dims = space_of(state).dims();
  const DensityMatrix rho = as_density(state);
  r.purity = rho.purity();
  Builder b(r);

  // A mixed-state file that happens to be pure takes the pure path.
  if (const auto* psi = std::get_if<PureState>(&state)) {
    r.kind = "pure";
    pure_entries(r, b, *psi, opts);
  } else if (rho.is_pure()) {
    r.kind = "mixed (rank one)";
    const auto eig = hermitian_eigen(rho.matrix());
    pure_entries(r, b, PureState::normalized(rho.space(), eig.vectors.col(eig.values.size() - 1)), opts);
  } else {
    r.kind = "mixed";
    mixed_entries(r, b, rho, opts, ropts);
  }

  const MeasureEntry& et = *r.find("E_T");
  b.check("E_T lower <= E_T upper", "E_T lower", et.value, "E_T upper", *et.upper, kIdentitySlack);
  b.check("E_T upper <= G^t", "E_T upper", *et.upper, "G^t", r.find("G^t")->value, kHierarchySlack);
  b.check("E_T lower <= G^f/c", "E_T lower", et.value, "G^f/c", r.find("G^f/c")->value, kHierarchySlack);
  b.check("G^t", "G^m", kHierarchySlack);
  b.check("G^f/c", "G^m", kHierarchySlack);
  b.check("G^m", "G^m_l", kIdentitySlack);
  b.check("G^f/c", "G^f_l", kIdentitySlack);
  b.check("G^f_l", "G^c_l", kHierarchySlack);
  b.check("G^c_l", "G^m_l", kHierarchySlack);
  return r;
}

std::string render_report(const MeasureReport& report, OutputFormat format) {
  if (format == OutputFormat::machine) {
    nlohmann::ordered_json doc;
    doc["dims"] = report.dims;
    doc["kind"] = report.kind;
    doc["purity"] = format_number(report.purity);
    auto& entries = doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
      nlohmann::ordered_json j;
      j["name"] = e.name;
      j["value"] = format_number(e.value);
      if (e.upper) j["upper"] = format_number(*e.upper);
      j["certificate_kind"] = to_string(e.kind);
      j["provenance"] = e.provenance;
      if (!e.certificate.empty()) j["certificate"] = e.certificate;
      if (e.recomputed) j["recomputed"] = format_number(*e.recomputed);
      if (e.optimizer_value) j["optimizer_value"] = format_number(*e.optimizer_value);
      entries.push_back(std::move(j));
    }
    auto& checks = doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"relation", c.relation},
                        {"lhs", format_number(c.lhs)},
                        {"rhs", format_number(c.rhs)},
                        {"slack", format_number(c.slack)},
                        {"ok", c.ok}});
    }
    doc["hierarchy_ok"] = report.hierarchy_ok();
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "dims [";
  for (std::size_t i = 0; i < report.dims.size(); ++i) out << (i ? "," : "") << report.dims[i];
  out << "]  kind " << report.kind << "  purity " << format_number(report.purity) << "\n\n";
  char line[512];
  std::snprintf(line, sizeof line, "%-8s %-36s %-12s %s\n", "measure", "value", "certificate", "provenance");
  out << line;
  for (const auto& e : report.entries) {
    std::string v = format_number(e.value);
    if (e.upper) v = "[" + v + ", " + format_number(*e.upper) + "]";
    std::snprintf(line, sizeof line, "%-8s %-36s %-12s %s\n", e.name.c_str(), v.c_str(), to_string(e.kind).c_str(),
                  e.provenance.c_str());
    out << line;
  }
  out << "\nhierarchy\n";
  for (const auto& c : report.checks) {
    out << (c.ok ? "  ok    " : "  FAIL  ") << c.relation << "  (" << format_number(c.lhs) << " vs "
        << format_number(c.rhs) << ")\n";
  }
  return out.str();
}

std::string render_violations(const MeasureReport& report) {
  std::ostringstream out;
  auto describe = [&](const std::string& name) {
    std::string base = name;
    for (const char* suffix : {" lower", " upper", " (optimizer)"}) {
      const auto pos = base.find(suffix);
      if (pos != std::string::npos) base = base.substr(0, pos);
    }
    const MeasureEntry* e = report.find(base);
    if (e == nullptr) return std::string("no witness");
    std::string s = e->provenance;
    if (!e->certificate.empty()) s += ", witness: " + e->certificate;
    if (e->recomputed) s += ", recomputed " + format_number(*e->recomputed);
    return s;
  };
  for (const auto& c : report.checks) {
    if (c.ok) continue;
    out << "hierarchy violation: " << c.relation << " fails by " << format_number(c.lhs - c.rhs) << "\n"
        << "  " << c.lhs_name << " = " << format_number(c.lhs) << " (" << describe(c.lhs_name) << ")\n"
        << "  " << c.rhs_name << " = " << format_number(c.rhs) << " (" << describe(c.rhs_name) << ")\n";
  }
  return out.str();
}

void dump_certificates(const MeasureReport& report, const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  auto slug = [](std::string s) {
    for (auto& ch : s) {
      if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    }
    return s;
  };
  for (const auto& [name, cert] : report.certificates) {
    const fs::path base = fs::path(directory) / slug(name);
    if (cert.product) {
      write_state_file(base.string() + ".product.json", PureState(cert.product->space(), cert.product->vector()));
    }
    if (cert.separable) write_state_file(base.string() + ".separable.json", *cert.separable);
    if (cert.decomposition) {
      nlohmann::json doc;
      doc["weights"] = nlohmann::json::array();
      doc["members"] = nlohmann::json::array();
      doc["member_products"] = nlohmann::json::array();
      for (const auto& m : cert.decomposition->members()) {
        doc["weights"].push_back(m.p);
        doc["members"].push_back(nlohmann::json::parse(serialize_state(m.psi)));
      }
      for (const auto& p : cert.member_products) {
        doc["member_products"].push_back(nlohmann::json::parse(serialize_state(PureState(p.space(), p.vector()))));
      }
      std::ofstream(base.string() + ".decomposition.json") << doc.dump() << "\n";
    }
  }
}

}  // namespace gme
