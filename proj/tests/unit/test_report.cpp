#include "doctest.h"

#include "cms/report.hpp"
#include "cms/suites.hpp"
#include "json.hpp"

using namespace cms;

TEST_CASE("report layout") {
  SuiteReport r{"gauge", "A(1,1)", {{"constant", "zero-order term is constant", Status::Pass, "-k - 1", 12.5},
                                    {"note", "informational", Status::Reported, "", 1}}};
  CHECK(r.passed());
  auto j = nlohmann::ordered_json::parse(r.to_json());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"version", "suite", "system", "claims", "overall"});
  CHECK(j["overall"] == "pass");
  CHECK(j["claims"][0]["witness"] == "-k - 1");
  CHECK(j["claims"][1]["status"] == "reported");
  CHECK_FALSE(j["claims"][0].contains("wall_ms"));
  CHECK(nlohmann::ordered_json::parse(r.to_json(true))["claims"][0]["wall_ms"] == 12);

  r.claims.push_back({"broken", "fails", Status::Fail, "1", 0});
  CHECK_FALSE(r.passed());
  CHECK(nlohmann::json::parse(r.to_json())["overall"] == "fail");
}

TEST_CASE("suite output is deterministic") {
  SuiteOptions o;
  o.family = Family::A;
  o.n = 2;
  o.m = 1;
  std::string a = run_suite("main-identity", o).to_json();
  std::string b = run_suite("main-identity", o).to_json();
  CHECK(a == b);
  CHECK(run_suite("main-identity", o).passed());
}

TEST_CASE("bad requests") {
  SuiteOptions o;
  CHECK_THROWS_AS(run_suite("bogus", o), UsageError);
  o.family = Family::G12;
  CHECK_THROWS_AS(run_suite("commute", o), UnsupportedError);
  CHECK(parse_rational("7/3") == Scalar::rational(7, 3));
  CHECK(parse_rational("-2") == Scalar(-2));
}
