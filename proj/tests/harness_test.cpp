#include <doctest.h>

#include <json.hpp>
#include <set>

#include "monopos/errors.hpp"
#include "monopos/graph_io.hpp"
#include "monopos/harness.hpp"
#include "monopos/version.hpp"

using namespace monopos;

TEST_CASE("manifest") {
  const auto& m = check_manifest();
  std::set<std::string> ids;
  for (const auto& c : m) {
    CHECK(ids.insert(c.id).second);
    CHECK(!c.description.empty());
  }
  CHECK(ids.count("cage-values"));
  CHECK(ids.count("graph6-roundtrip"));
  CHECK(m.size() == 29);
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(run_suite({"cage-values", "no-such-check"}), DomainError);
  SuiteOptions none;
  none.seeds.clear();
  CHECK_THROWS_AS(run_suite({"cage-values"}, none), DomainError);
}

TEST_CASE("selected checks run in manifest order") {
  auto r = run_suite({"petersen-gp", "cage-values"});
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].id == "cage-values");
  CHECK(r.checks[1].id == "petersen-gp");
  CHECK(r.passed == 2);
  CHECK(r.failed == 0);
  CHECK(r.checks[0].instances == 6);
  CHECK(r.version == kVersion);
}

TEST_CASE("failures carry graph6 witnesses") {
  auto r = run_suite({"r-graph-diss-gp2"});
  const auto& c = r.checks.at(0);
  CHECK(c.status == CheckStatus::fail);
  CHECK(c.failure_count == 7);
  REQUIRE(!c.failures.empty());
  Graph g = parse_graph6(c.failures[0].graph6);
  CHECK(g == complete_graph(3));
  CHECK(c.failures[0].expected == "2, 2");
  CHECK(c.failures[0].actual == "2, 3");
}

TEST_CASE("reports are deterministic") {
  SuiteOptions opts;
  opts.seeds = {3, 4};
  const std::vector<std::string> pick{"unicyclic-formula", "split-graphs", "pendant-growth", "reduction"};
  opts.threads = 4;
  const std::string a = report_json(run_suite(pick, opts), false);
  opts.threads = 1;
  const std::string b = report_json(run_suite(pick, opts), false);
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["seeds"] == nlohmann::json::array({3, 4}));
  CHECK(!j.contains("wall_ms"));
  CHECK(!j["checks"][0].contains("ms"));
  CHECK(j["totals"]["pass"] == 4);
  // Seeds change the corpora.
  opts.seeds = {5};
  CHECK(report_json(run_suite({"unicyclic-formula"}, opts), false) != report_json(run_suite({"unicyclic-formula"}), false));
}

TEST_CASE("text report") {
  auto text = report_text(run_suite({"cage-values", "r-graph-diss-gp2"}));
  CHECK(text.find("pass  cage-values") != std::string::npos);
  CHECK(text.find("fail  r-graph-diss-gp2") != std::string::npos);
  CHECK(text.find("1 passed, 1 failed, 0 skipped") != std::string::npos);
}
