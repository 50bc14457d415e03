#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derring/scenario.hpp"

using namespace derring;

TEST_CASE("name parsers") {
  CHECK(parse_ring("Zmod(6)").cardinality() == 6);
  CHECK(parse_ring("Mat(2,Zmod(2))").cardinality() == 16);
  CHECK(parse_ring("Prod(Zmod(2),Zmod(3))").cardinality() == 6);
  CHECK(parse_ring("GF(2,2)").cardinality() == 4);
  CHECK_THROWS_AS(parse_ring("Weird(3)"), error);
  CHECK(parse_group("C6").order() == 6);
  CHECK(parse_group("C2xC4").order() == 8);
  CHECK(parse_group("S4").order() == 24);
  CHECK(parse_group("Heis3").order() == 27);
  CHECK_THROWS_AS(parse_group("X5"), error);

  nlohmann::json rj = {{"orders", {2, 2}},
                       {"mul",
                        {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}},
                       {"one", {1, 0}}};
  FiniteRing r = parse_ring(rj);
  CHECK(r.cardinality() == 4);
  nlohmann::json gj = {{"order", 2}, {"table", {{0, 1}, {1, 0}}}};
  CHECK(parse_group(gj).order() == 2);
}

TEST_CASE("oracle scenario equals the solver on the default family") {
  ScenarioConfig cfg;
  cfg.check = "ORACLE";
  Report rep = run_scenario(cfg);
  CHECK(rep.count("FAIL") == 0);
  CHECK(rep.count("ERROR") == 0);
  CHECK(rep.count("PASS") > 0);
}

TEST_CASE("T2 on a small slice") {
  ScenarioConfig cfg;
  cfg.check = "T2";
  cfg.groups = {"C2", "C4", "C2xC2", "C3"};
  cfg.rings = {"Zmod(3)", "Zmod(5)", "Zmod(2)", "Zmod(15)"};
  Report rep = run_scenario(cfg);
  CHECK(rep.count("FAIL") == 0);
  CHECK(rep.count("ERROR") == 0);
  CHECK(rep.count("SKIP") > 0);  // modular pairs skip
  CHECK(rep.count("PASS") > 0);
}

TEST_CASE("hypothesis-violating instances are SKIP, not PASS") {
  ScenarioConfig cfg;
  cfg.check = "C14";
  cfg.groups = {"S3"};
  cfg.rings = {"Zmod(6)"};  // 2,3 not invertible
  Report rep = run_scenario(cfg);
  REQUIRE(rep.instances.size() == 1);
  CHECK(rep.instances[0].verdict == "SKIP");
  CHECK(!rep.instances[0].hypothesis_satisfied);
}

TEST_CASE("C14 on the coprime pair (Z/5, S3)") {
  ScenarioConfig cfg;
  cfg.check = "C14";
  cfg.groups = {"S3"};
  cfg.rings = {"Zmod(5)"};
  Report rep = run_scenario(cfg);
  REQUIRE(rep.instances.size() == 1);
  CHECK(rep.instances[0].verdict == "PASS");
  CHECK(rep.instances[0].detail["der_r_cardinality"] == "125");
}

TEST_CASE("T5 scan flags M2(F2) and nothing else fails") {
  ScenarioConfig cfg;
  cfg.check = "T5SCAN";
  Report rep = run_scenario(cfg);
  CHECK(rep.count("FAIL") == 0);
  CHECK(rep.count("ERROR") == 0);
  bool flagged = false;
  for (const Instance &i : rep.instances)
    if (i.ring == "Mat(2,Zmod(2))" && i.verdict == "FLAG") flagged = true;
  CHECK(flagged);
}

TEST_CASE("GGC4 scenario passes on a slice") {
  ScenarioConfig cfg;
  cfg.check = "GGC4";
  cfg.rings = {"Zmod(3)", "Mat(2,Zmod(2))"};
  cfg.groups = {"S3", "Q8"};
  Report rep = run_scenario(cfg);
  CHECK(rep.count("FAIL") == 0);
  CHECK(rep.count("ERROR") == 0);
}

TEST_CASE("reports are deterministic modulo the timestamp") {
  ScenarioConfig cfg;
  cfg.check = "L9";
  cfg.seed = 7;
  Report a = run_scenario(cfg);
  Report b = run_scenario(cfg);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  nlohmann::json with_ts = a.to_json(true);
  CHECK(with_ts.contains("timestamp"));
  with_ts.erase("timestamp");
  CHECK(with_ts.dump() == a.to_json(false).dump());
}

TEST_CASE("config round trip and unknown check") {
  nlohmann::json j = {{"check", "T2"},
                      {"rings", {"Zmod(5)"}},
                      {"groups", {"C2"}},
                      {"seed", 9},
                      {"caps", {{"enumeration", 512}}}};
  ScenarioConfig cfg = ScenarioConfig::from_json(j);
  CHECK(cfg.check == "T2");
  CHECK(cfg.caps.enumeration == 512);
  CHECK(cfg.seed == 9);
  ScenarioConfig bad;
  bad.check = "NOPE";
  CHECK_THROWS_AS(run_scenario(bad), error);
}

TEST_CASE("empty family yields an empty passing report") {
  ScenarioConfig cfg;
  cfg.check = "T2";
  cfg.groups = {"S3"};  // non-abelian: filtered before instancing
  cfg.rings = {"Zmod(5)"};
  Report rep = run_scenario(cfg);
  CHECK(rep.instances.empty());
  CHECK(rep.exit_code() == 0);
}
