#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monopos {

enum class CheckKind { equality, inequality, structural, realization };
enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckKind k);
const char* to_string(CheckStatus s);

/// A reproducible counterexample: the graph, what was being checked and both
/// values.
struct CheckFailure {
  std::string graph6;
  std::string instance;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string id;
  CheckKind kind = CheckKind::equality;
  std::string description;
  std::string corpus;
  CheckStatus status = CheckStatus::pass;
  int instances = 0;
  int skipped_instances = 0;
  int failure_count = 0;
  /// First kMaxStoredFailures failures in corpus order.
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;
  double ms = 0.0;
};

inline constexpr std::size_t kMaxStoredFailures = 8;

struct CheckInfo {
  std::string id;
  CheckKind kind;
  std::string description;
  /// Corpus depends on the seeds (deterministic checks run once).
  bool seeded;
  std::string corpus;
};

const std::vector<CheckInfo>& check_manifest();

struct SuiteOptions {
  std::vector<std::uint64_t> seeds{1};
  /// 0 picks the hardware concurrency.
  int threads = 0;
};

struct RunReport {
  std::string version;
  std::vector<std::uint64_t> seeds;
  std::vector<CheckResult> checks;  // manifest order
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  double wall_ms = 0.0;
};

/// Runs the selected checks (all when selection is empty). Unknown ids throw
/// DomainError. Failures are data: the call itself only throws on bad ids.
RunReport run_suite(const std::vector<std::string>& selection = {}, const SuiteOptions& opts = {});

/// Deterministic JSON (keys sorted). Timing fields are dropped unless
/// include_timing is set, which makes reports byte-comparable.
std::string report_json(const RunReport& r, bool include_timing = true);
std::string report_text(const RunReport& r);

}  // namespace monopos
