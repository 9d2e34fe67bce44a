#include <doctest.h>

#include <set>

#include "cfl/error.hpp"
#include "cfl/groups/catalog.hpp"
#include "cfl/report/cases.hpp"
#include "cfl/report/report.hpp"

using namespace cfl;

TEST_CASE("case graph") {
  auto dag = check_specializations();
  CHECK(dag.acyclic);
  CHECK(dag.violations.empty());
  for (const auto& n : case_nodes())
    for (const auto& g : n.groups) CHECK(Catalog::builtin().find(g) != nullptr);
  CHECK(case_ancestors("2B.4") == std::vector<std::string>{"2B.1", "2B.3"});
  CHECK(case_ancestors("3.3") == std::vector<std::string>{"3.1", "3.2"});
  CHECK(strictly_specializes(case_node("3.1"), case_node("3.3")));
  CHECK_FALSE(strictly_specializes(case_node("3.3"), case_node("3.1")));
  CHECK_FALSE(strictly_specializes(case_node("2B.2"), case_node("2B.3")));
  CHECK(strictly_specializes(case_node("2A.1"), case_node("2A.4")));
  CHECK_THROWS_AS(case_node("9.9"), Error);
}

TEST_CASE("table rows use catalog orders") {
  std::set<std::string> seen;
  for (const auto& r : table1_rows()) {
    const auto* e = Catalog::builtin().find(r.group);
    REQUIRE(e);
    CHECK(e->group.order() == r.order);
    seen.insert(r.group);
  }
  CHECK(seen.size() == 20);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.command = "demo";
  r.inputs["max_order"] = "1000";
  r.check("a", "x.a", "1", "1");
  r.check("b", "x.b", "1", "2");
  r.external("c", "x.c", "see literature");
  CHECK_FALSE(r.passed());
  CHECK(r.count(CheckStatus::fail) == 1);
  auto j = report_to_json(r);
  CHECK(report_from_json(j) == r);
  CHECK(report_to_json(report_from_json(j)) == j);
  CHECK(j.find("timing") == std::string::npos);
  r.seconds = 1.5;
  CHECK(report_from_json(report_to_json(r, true)).seconds == doctest::Approx(1.5));
  CHECK_THROWS_AS(report_from_json("{\"command\": 3}"), Error);
  CHECK(report_to_text(r).find("FAIL") != std::string::npos);
}

TEST_CASE("verify targets") {
  CHECK(verify_targets().size() == 10);
  CHECK_THROWS_AS(verify("nope"), Error);
  for (const auto* t : {"conic", "dp5", "dp6", "specializations"}) {
    auto a = verify(t);
    INFO(report_to_text(a));
    CHECK(a.passed());
    CHECK(report_to_json(a) == report_to_json(verify(t)));
  }
}
