#include "support.hpp"

#include <fstream>

#include "addchow/degeneration/degeneration.hpp"
#include "addchow/error.hpp"

using namespace addchow;
using testing::form;

namespace {

bool all_pass(const ScenarioOutcome& o) {
  for (const auto& c : o.checks)
    if (c.status == Status::Fail) return false;
  return o.split.has_value();
}

}  // namespace

TEST_SUITE("degeneration") {

TEST_CASE("simplex scenarios split with s = 1 and the closed forms") {
  for (int n = 0; n <= 3; ++n) {
    const ScenarioOutcome o = run_scenario(simplex_scenario(n));
    CHECK(all_pass(o));
    REQUIRE(o.split);
    CHECK(o.split->s == 1);
  }
}

TEST_CASE("reconstruction omega = t^s nu + s t^(s-1) dt ^ gamma") {
  for (const auto& sc : {simplex_scenario(2), elliptic_scenario(), quadric_scenario(2)}) {
    const SplitResult r = split(sc);
    const TowerPtr& T = r.target;
    const FieldElement t = FieldElement::variable(T, std::size_t{0});
    const FieldElement s = FieldElement::from_int(T, r.s);
    const DifferentialForm rebuilt =
        r.nu.scaled(t.pow(static_cast<int>(r.s))) + wedge(d(t), r.gamma).scaled(s * t.pow(static_cast<int>(r.s) - 1));
    CHECK(rebuilt == r.pulled);
  }
}

TEST_CASE("elliptic scenario") {
  const ScenarioOutcome o = run_scenario(elliptic_scenario());
  CHECK(all_pass(o));
  REQUIRE(o.cusp);
  CHECK(o.cusp->residue_gamma == "1/s");
  CHECK(o.cusp->epsilon == -1);
  const TowerPtr T = o.split->target;
  CHECK(o.split->nu == form(T, "(-1/(t^6*b + t^4*v2*a + v2^3 - v1^2)) dv1^dv2", 2));
}

TEST_CASE("quadric n = 2 limits") {
  const ScenarioOutcome o = run_scenario(quadric_scenario(2));
  CHECK(all_pass(o));
  REQUIRE(o.split);
  CHECK(o.split->s == 3);
  const TowerPtr T = o.split->target;
  CHECK(at_t_zero(o.split->nu) == form(T, "(1) dv1^dv2^dv3", 3));
  CHECK(at_t_zero(o.split->gamma) == form(T, "(v3/3) dv1^dv2 + (-v2/3) dv1^dv3 + (v1/3) dv2^dv3", 2));
}

TEST_CASE("s divisible by the characteristic is refused") {
  CHECK_THROWS_AS(split(quadric_scenario(2, 3)), Error);
  try {
    split(quadric_scenario(2, 3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CharacteristicObstruction);
  }
  const ScenarioOutcome o = run_scenario(quadric_scenario(2, 3));
  CHECK_FALSE(o.split);
  CHECK(o.error == "CharacteristicObstruction");
}

TEST_CASE("limits stay regular under arbitrary weights") {
  // The dt-part of a weighted pull-back never drops more than one t-adic
  // order below the dt-free part, so only s = 0 can be refused.
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      DegenerationScenario sc = simplex_scenario(1);
      sc.weights = {a, b};
      sc.expected_s.reset();
      sc.expected_nu_limit.reset();
      sc.expected_gamma_limit.reset();
      sc.simplex_closed_form = false;
      try {
        split(sc);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CharacteristicObstruction);
      }
    }
}

TEST_CASE("cusp check is skipped where dg/dv1 vanishes") {
  const ScenarioOutcome o = run_scenario(elliptic_scenario(2));
  bool skipped = false;
  for (const auto& c : o.checks)
    if (c.name == "cusp residues") skipped = c.status == Status::Skip;
  CHECK(skipped);
}

TEST_CASE("scenario JSON round trip") {
  for (const auto& sc : {simplex_scenario(2), elliptic_scenario(), quadric_scenario(2)}) {
    const nlohmann::json j = scenario_to_json(sc);
    CHECK(scenario_to_json(scenario_from_json(j)) == j);
  }
  CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse("{\"name\": 3}")), Error);
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), Error);
}

}  // TEST_SUITE
