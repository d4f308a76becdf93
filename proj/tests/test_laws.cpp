#include <set>

#include "doctest.h"
#include "evo/catalog.hpp"
#include "evo/laws.hpp"

using namespace evo;

namespace {

EqConfig quick_cfg() {
  EqConfig cfg;
  cfg.input_samples = 16;
  cfg.time_grid = 64;
  return cfg;
}

}  // namespace

TEST_CASE("the whole suite passes at the default tolerance") {
  auto reports = run_law_suite(quick_cfg());
  CHECK(reports.size() == law_suite_ids().size());
  for (const auto& r : reports) {
    INFO(r.line());
    CHECK(r.passed());
  }
}

TEST_CASE("the suite covers every advertised law group") {
  std::set<std::string> groups;
  for (const auto& id : law_suite_ids())
    groups.insert(id.substr(0, id.find('.')));
  for (const char* g :
       {"monad", "em", "kleisli", "coprod", "lift", "prod", "sync",
        "syncprod", "iter", "strength"}) {
    INFO(g);
    CHECK(groups.count(g) == 1);
  }
}

TEST_CASE("filtering by group") {
  auto monad = run_law_suite(quick_cfg(), "monad");
  CHECK(monad.size() == 3);
  auto iter = run_law_suite(quick_cfg(), "iter");
  CHECK(iter.size() == 6);
  for (const auto& r : iter) CHECK(r.passed());
}

TEST_CASE("reports are deterministic for a fixed seed") {
  auto a = run_law_suite(quick_cfg());
  auto b = run_law_suite(quick_cfg());
  CHECK(law_reports_json(a) == law_reports_json(b));

  EqConfig other = quick_cfg();
  other.seed = 43;
  auto c = run_law_suite(other, "kleisli");
  auto d = run_law_suite(quick_cfg(), "kleisli");
  // same verdicts even under a different sampling seed
  REQUIRE(c.size() == d.size());
  for (size_t i = 0; i < c.size(); ++i) CHECK(c[i].passed() == d[i].passed());
}

TEST_CASE("the interleaving counterexample is expected to deviate") {
  auto reports = run_law_suite(quick_cfg(), "strength.noncommutative");
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].passed());
  CHECK(reports[0].worst_deviation > 0.5);
}

TEST_CASE("component_approx_eq is reflexive") {
  Component c = kleisli_compose(make_maintainer(), make_thermostat());
  LawReport r = component_approx_eq(c, c, quick_cfg());
  CHECK(r.passed());
  CHECK(r.worst_deviation == 0.0);
}

TEST_CASE("component_approx_eq accepts the unit law") {
  for (Component c : {make_thermostat(), make_amplifier(),
                      make_signal_generator(1.0, Duration(20.0))}) {
    LawReport r = component_approx_eq(
        kleisli_compose(copy(c.output_space()), c), c, quick_cfg());
    CHECK(r.passed());
  }
}

TEST_CASE("component_approx_eq rejects distinct components with a witness") {
  LawReport r = component_approx_eq(make_amplifier(), copy(Space::real()),
                                    quick_cfg());
  CHECK(r.status == LawReport::Status::Fail);
  CHECK(r.has_witness);
  CHECK(r.worst_deviation > 0.1);
}

TEST_CASE("component_approx_eq reports space mismatches as failures") {
  LawReport r = component_approx_eq(make_thermostat(),
                                    lift_dup(Space::real()), quick_cfg());
  CHECK(r.status == LawReport::Status::Fail);
  CHECK(r.reason.find("space mismatch") != std::string::npos);
}

TEST_CASE("a zero tolerance is rejected as misuse") {
  EqConfig cfg = quick_cfg();
  cfg.tol = 0.0;
  CHECK_THROWS_AS(run_law_suite(cfg), error);
  CHECK_THROWS_AS(
      component_approx_eq(make_thermostat(), make_thermostat(), cfg), error);
}

TEST_CASE("law reports serialize to text and json") {
  auto reports = run_law_suite(quick_cfg(), "monad.left_unit");
  REQUIRE(reports.size() == 1);
  const LawReport& r = reports[0];
  CHECK(r.line().find("monad.left_unit") != std::string::npos);
  CHECK(r.json_str().find("\"status\":\"pass\"") != std::string::npos);
  CHECK(r.json_str().find("\"law_id\":\"monad.left_unit\"") !=
        std::string::npos);
}

TEST_CASE("the strict product block skips incompatible samples") {
  auto reports = run_law_suite(quick_cfg(), "prod");
  size_t total_skipped = 0;
  for (const auto& r : reports) {
    CHECK(r.passed());
    total_skipped += r.samples_skipped;
  }
  CHECK(total_skipped > 0);
}
