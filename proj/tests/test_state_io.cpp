#include "doctest.h"
#include "gme/families.hpp"
#include "gme/state_io.hpp"

using namespace gme;

TEST_CASE("pure and mixed round trips are exact") {
  std::mt19937_64 rng(11);
  const AnyState psi = random_pure(Space({2, 3}), rng);
  const auto back = parse_state(serialize_state(psi));
  CHECK((std::get<PureState>(back).amplitudes() - std::get<PureState>(psi).amplitudes()).norm() == 0.0);
  const AnyState rho = random_mixed(Space({2, 2}), rng);
  const auto back2 = parse_state(serialize_state(rho));
  CHECK((std::get<DensityMatrix>(back2).matrix() - std::get<DensityMatrix>(rho).matrix()).norm() == 0.0);
}

TEST_CASE("hand-written Bell file") {
  const auto s = parse_state(R"({"dims":[2,2],"kind":"pure","data":[[0.7071067811865476,0],[0,0],[0,0],[0.7071067811865476,0]]})");
  CHECK(std::holds_alternative<PureState>(s));
  CHECK(as_density(s).purity() == doctest::Approx(1.0));
  CHECK(space_of(s) == Space({2, 2}));
}

TEST_CASE("malformed documents are parse errors") {
  CHECK_THROWS_AS(parse_state("not json"), StateParseError);
  CHECK_THROWS_AS(parse_state(R"({"dims":[2],"kind":"pure"})"), StateParseError);
  CHECK_THROWS_AS(parse_state(R"({"dims":[2],"kind":"other","data":[]})"), StateParseError);
  CHECK_THROWS_AS(parse_state(R"({"dims":[2],"kind":"pure","data":[[1,0]]})"), StateParseError);
  CHECK_THROWS_AS(parse_state(R"({"dims":[2],"kind":"pure","data":[[1,0],[1,0]]})"), StateParseError);
  CHECK_THROWS_AS(parse_state(R"({"dims":[2],"kind":"pure","data":[[1],[0,0]]})"), StateParseError);
  CHECK_THROWS_AS(parse_state(R"({"dims":[2],"kind":"mixed","data":[[[1,0],[0,0]],[[0,0],[1,0]]]})"), StateParseError);
  CHECK_THROWS_AS(parse_state(R"({"dims":[1],"kind":"pure","data":[[1,0]]})"), StateParseError);
  CHECK_THROWS_AS(parse_state(R"({"dims":["2"],"kind":"pure","data":[[1,0],[0,0]]})"), StateParseError);
}

TEST_CASE("oversized spaces stay a budget error") {
  CHECK_THROWS_AS(parse_state(R"({"dims":[100,100],"kind":"pure","data":[]})"), std::length_error);
}
