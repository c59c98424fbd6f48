#include "doctest.h"
#include "gme/verify.hpp"

using namespace gme;

namespace {

void require_clean(const SuiteResult& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
  CHECK(r.failed() == 0);
  CHECK(r.passed() > 0);
}

}  // namespace

TEST_CASE("analytic suites pass") {
  for (const char* name : {"partition", "graph", "appendix"}) {
    INFO(name);
    require_clean(run_suite(name, {}));
  }
}

TEST_CASE("families suite passes") { require_clean(run_suite("families", {})); }

TEST_CASE("hierarchy suite on a small sample") {
  SuiteOptions o;
  o.samples = 2;
  o.seed = 5;
  require_clean(run_suite("hierarchy", o));
}

TEST_CASE("incomparability patterns") { require_clean(run_incomparability()); }

TEST_CASE("unknown suites are rejected") { CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument); }

TEST_CASE("summary line") {
  const auto r = run_suite("appendix", {});
  const auto text = render_suite(r, OutputFormat::text);
  CHECK(text.find("RESULT pass=" + std::to_string(r.passed()) + " fail=0") != std::string::npos);
}
