#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

// Verification suite: every check runs one theorems/localization operation
// for a given n and records a witness.
namespace hamloc::suite {

enum class Status { Pass, Fail, Excluded };

std::string_view to_string(Status s);

struct CheckInfo {
  std::string_view id;
  std::string_view section;
  int stage;  // position of the section in the derivation order
};

/// Every check, ordered by (stage, id).
const std::vector<CheckInfo>& catalog();

struct CheckResult {
  std::string id;
  std::string section;
  Status status = Status::Fail;
  nlohmann::ordered_json witness;
  long elapsed_ms = 0;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int excluded = 0;
};

struct Report {
  int n = 0;
  std::vector<CheckResult> checks;
  Summary summary;
};

struct SuiteOptions {
  int n_min = 1;
  int n_max = 1;
  /// "all", a check id, or a section name.
  std::string selector = "all";
  int jobs = 1;
  long a0_bound = 100;
  /// Record wall-clock time per check; otherwise elapsed_ms stays 0 so the
  /// report is byte-stable.
  bool timings = false;
};

inline constexpr std::string_view kReportVersion = "1";

bool is_known_selector(std::string_view selector);

/// Throws Error{Precondition} for an empty or non-positive range and for an
/// unknown selector. Reports come back in increasing n regardless of jobs.
std::vector<Report> run_suite(const SuiteOptions& opts);

/// Runs a single check; unknown ids throw Error{Precondition}.
CheckResult run_check(std::string_view id, int n, const SuiteOptions& opts);

bool all_pass(const std::vector<Report>& reports);

nlohmann::ordered_json to_json(const std::vector<Report>& reports, const SuiteOptions& opts);

/// Line-oriented: one "SECTION  CHECK-ID  STATUS  WITNESS" line per check,
/// preceded by a "# n = k" header and followed by a summary line.
std::string to_text(const std::vector<Report>& reports);

enum class Format { Text, Json };

/// Throws Error{Parse} for anything other than "text" or "json".
Format parse_format(std::string_view s);

/// Characteristic classes, Betti numbers, ring relations and the equivariant
/// module basis of the Grassmannian model for one n.
nlohmann::ordered_json invariants_json(int n);
std::string emit_invariants(int n, Format format);

}  // namespace hamloc::suite
