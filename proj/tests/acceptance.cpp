// One line per acceptance criterion; exit status 1 when any line fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "monopos/harness.hpp"

using namespace monopos;

namespace {

struct Need {
  std::string check;
  int min_instances;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Need> needs;
};

const std::vector<Criterion> kCriteria{
    {1, "cage values 3, 3, 2, each under 60 s", {{"cage-values", 6}}},
    {2, "Petersen gp = 6, mp <= gp, under 10 s", {{"petersen-gp", 3}}},
    {3, "branch and bound equals subset enumeration", {{"oracle-equivalence", 2500}}},
    {4,
     "family formulas",
     {{"block-graphs", 200},
      {"complete-multipartite", 1},
      {"unicyclic-formula", 200},
      {"corona-formula", 200},
      {"join-formula", 200},
      {"bipartite-complement", 1},
      {"split-graphs", 400}}},
    {5,
     "bound suite",
     {{"longest-path-bound", 1},
      {"path-partition-bound", 1},
      {"cut-vertex-bound", 1},
      {"simplicial-bound", 1},
      {"triangle-free-bound", 1},
      {"cubic-bound", 1}}},
    {6, "pendant vertices", {{"pendant-growth", 600}, {"pendant-simplicial", 1}}},
    {7,
     "realization tables",
     {{"mp-gp-realization", 28},
      {"igp-mp-realization", 1},
      {"rp-constructions", 49},
      {"r-graph-diss-gp2", 28},
      {"hull-realization", 1}}},
    {8, "clique reduction, under 5 min", {{"reduction", 100}}},
    {9, "hull machinery", {{"hull-machinery", 100}}},
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  const RunReport report = run_suite();
  const double wall = seconds_since(t0);
  std::map<std::string, const CheckResult*> by_id;
  for (const auto& c : report.checks) by_id[c.id] = &c;

  int failed = 0;
  for (const auto& crit : kCriteria) {
    std::string detail;
    bool ok = true;
    for (const auto& need : crit.needs) {
      const CheckResult& c = *by_id.at(need.check);
      const bool pass = c.status == CheckStatus::pass && c.instances >= need.min_instances;
      if (!pass) {
        ok = false;
        detail += " " + need.check + "(" + to_string(c.status) + ", " + std::to_string(c.failure_count) + "/" +
                  std::to_string(c.instances) + " failed)";
      }
    }
    failed += !ok;
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", crit.number, crit.title.c_str(),
                ok ? "" : (" --" + detail).c_str());
  }

  const std::string first = report_json(report, false);
  const std::string second = report_json(run_suite(), false);
  const CheckResult& g6 = *by_id.at("graph6-roundtrip");
  const bool stable = first == second;
  const bool ok10 = stable && g6.status == CheckStatus::pass && wall < 600.0;
  failed += !ok10;
  std::printf("%s criterion 10: byte-stable report (%s), graph6 round-trip (%d graphs), suite %.1f s\n",
              ok10 ? "PASS" : "FAIL", stable ? "stable" : "differs", g6.instances, wall);

  std::printf("%d of 10 criteria pass; suite: %d passed, %d failed, %d skipped\n", 10 - failed, report.passed,
              report.failed, report.skipped);
  return failed == 0 ? 0 : 1;
}
