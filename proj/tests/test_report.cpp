#include "doctest.h"
#include "gme/families.hpp"
#include "gme/report.hpp"
#include "json.hpp"

using namespace gme;

namespace {

double value_of(const MeasureReport& r, const std::string& name) {
  const auto* e = r.find(name);
  REQUIRE(e != nullptr);
  return e->value;
}

}  // namespace

TEST_CASE("Bell report") {
  const auto r = build_report(AnyState(make_mes(2)));
  CHECK(r.hierarchy_ok());
  for (const char* name : {"G^f/c", "G^f", "G^c", "G^m", "G^t"}) CHECK(value_of(r, name) == doctest::Approx(0.5).epsilon(1e-6));
  for (const char* name : {"G^f_l", "G^c_l", "G^m_l"}) CHECK(value_of(r, name) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.max_recomputation_error() < 1e-9);
}

TEST_CASE("maximally mixed two-qubit report") {
  const auto r = build_report(AnyState(DensityMatrix::maximally_mixed(Space({2, 2}))));
  CHECK(r.hierarchy_ok());
  CHECK(value_of(r, "G^f/c") == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(value_of(r, "G^m") == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(value_of(r, "G^t") == doctest::Approx(0.5625).epsilon(1e-9));
}

TEST_CASE("maximally correlated report shows strict logarithmic gaps") {
  const auto r = build_report(AnyState(make_maxcorr(MaxCorrSpec::rank2(1, 3, 0.5))));
  CHECK(r.hierarchy_ok());
  const double fl = value_of(r, "G^f_l");
  const double cl = value_of(r, "G^c_l");
  const double ml = value_of(r, "G^m_l");
  CHECK(fl == doctest::Approx(0.585).epsilon(1e-3));
  CHECK(cl == doctest::Approx(0.7888).epsilon(1e-3));
  CHECK(ml == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(fl < cl);
  CHECK(cl < ml);
}

TEST_CASE("rendering is deterministic and both formats parse the same entries") {
  const AnyState s(make_mes(2));
  const auto a = render_report(build_report(s), OutputFormat::text);
  const auto b = render_report(build_report(s), OutputFormat::text);
  CHECK(a == b);
  const auto j = nlohmann::json::parse(render_report(build_report(s), OutputFormat::machine));
  CHECK(j.contains("entries"));
  CHECK(a.find("G^t") != std::string::npos);
}

TEST_CASE("violations render empty for a consistent report") {
  CHECK(render_violations(build_report(AnyState(make_mes(2)))).empty());
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(to_string(CertificateKind::lower_bound) == "lower-bound");
}
