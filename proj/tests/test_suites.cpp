#include "doctest.h"

#include "suites.hpp"

using namespace sbo;

namespace {

std::vector<std::string> statuses(const std::vector<SuiteReport>& rs) {
  std::vector<std::string> v;
  for (const auto& r : rs)
    for (const auto& c : r.checks) v.push_back(c.check.substr(0, 12) + (c.pass ? "+" : "-"));
  return v;
}

}  // namespace

TEST_CASE("1000 seeded property checks") {
  const auto v = check_properties(2024, 200);
  REQUIRE(v.size() == 5);
  for (const auto& r : v) CHECK_MESSAGE(r.pass, r.check << ": " << r.details);
}

TEST_CASE("reports are deterministic") {
  RunConfig cfg;
  cfg.seed = 7;
  for (const std::string s : {"restriction", "n2-classify", "algebra-axioms", "residue-scalar"}) {
    const auto a = to_json(run_suites(s, cfg), cfg).dump();
    const auto b = to_json(run_suites(s, cfg), cfg).dump();
    CHECK(a == b);
  }
  RunConfig c8 = cfg;
  c8.seed = 8;
  const auto r7 = run_suites("n2-classify", cfg), r8 = run_suites("n2-classify", c8);
  CHECK(statuses(r7).size() == statuses(r8).size());
  CHECK(to_json(r7, cfg)["status"] == to_json(r8, c8)["status"]);
  CHECK(to_json(r7, cfg).dump() != to_json(r8, c8).dump());
  // symbolic mode ignores the seed
  RunConfig s7 = cfg, s8 = c8;
  s7.mode = s8.mode = RunMode::Symbolic;
  CHECK(to_json(run_suites("n2-classify", s7), s7).dump() == to_json(run_suites("n2-classify", s8), s8).dump());
  CHECK_THROWS_AS(run_suites("nonsense", cfg), std::invalid_argument);
}

TEST_CASE("report schema and anchor coverage") {
  RunConfig cfg;
  const auto rs = run_suites("all", cfg);
  CHECK(rs.size() == suite_names().size());
  std::set<std::string> anchors;
  for (const auto& r : rs)
    for (const auto& c : r.checks) {
      anchors.insert(c.anchor);
      const auto j = to_json(c, false);
      std::vector<std::string> keys;
      for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
      CHECK(keys == std::vector<std::string>{"check", "anchor", "status", "details", "millis"});
    }
  for (const std::string a :
       {"determinant-constructors", "restriction-scalar", "restriction-vanishing", "bernstein-sato-D", "bernstein-sato-F",
        "iterated-bernstein-sato", "composition-order", "rewrite-identity", "expansion-lemma", "expansion-lemma-m0",
        "multiplicity-two-basis", "residue-scalar", "gamma-ratio-polynomial", "gamma-numeric", "riesz-residue",
        "pde-display-k1", "n2-classification", "algebra-axioms"})
    CHECK_MESSAGE(anchors.count(a), a);
  for (const auto& r : rs) CHECK_MESSAGE(r.pass(), r.suite);
}

TEST_CASE("single classification instance") {
  RunConfig cfg;
  cfg.k = 1;
  cfg.lambda = std::vector<Rational>{0, 1, 3};
  cfg.nu = std::vector<Rational>{frac(5, 2), frac(1, 2)};
  const auto rs = run_suites("n2-classify", cfg);
  REQUIRE(rs.at(0).checks.size() == 1);
  CHECK(rs[0].checks[0].details.rfind("dimension 2", 0) == 0);
  cfg.n = 3;
  CHECK_THROWS_WITH(run_suites("n2-classify", cfg), "unsupported n");
}
