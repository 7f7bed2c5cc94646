#pragma once

// Named, independently runnable checks with machine-readable reports, and
// the manifest format that selects them.

#include "g2e8/error.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace g2e8::checks {

enum class Status { Pass, Fail, ReportOnly };
std::string_view status_str(Status s);

struct CheckReport {
  std::string id;
  std::string location;  // serialized as "paper_location"
  Status status = Status::Fail;
  std::string expected;
  std::string computed;
  std::optional<int> truncation;
  double runtime_ms = 0;
};

using Params = std::map<std::string, int>;

/// Raised for manifests that name unknown checks or parameters.
struct UsageError : Error {
  using Error::Error;
};

/// What a check body returns; id, location and timing are filled in by run().
struct Outcome {
  Status status = Status::Fail;
  std::string expected, computed;
  std::optional<int> truncation;
};

struct CheckDef {
  std::string id;
  std::string location;
  std::vector<std::string> param_keys;
  /// Takes the D parameter from RunConfig::degree when not given.
  bool uses_degree = false;
  bool in_default = true;
  std::function<Outcome(const Params&)> body;
};

const std::vector<CheckDef>& registry();
const CheckDef* find_check(std::string_view id);

struct ManifestEntry {
  std::string id;
  Params params;
};

/// [{"id": ..., "params": {...}}, ...]; throws UsageError on unknown ids,
/// unknown keys, non-integer parameters or malformed JSON.
std::vector<ManifestEntry> parse_manifest(std::string_view json_text);
/// Every registered check with in_default set, in registry order.
std::vector<ManifestEntry> default_manifest();

struct RunConfig {
  int degree = 10;
  int jobs = 1;
};

/// Runs the entries on at most cfg.jobs threads; reports come back in
/// manifest order.  The first exception escaping a check is rethrown
/// after all workers have stopped.
std::vector<CheckReport> run(const std::vector<ManifestEntry>& manifest, const RunConfig& cfg);
CheckReport run_one(const ManifestEntry& entry, const RunConfig& cfg);

std::string to_json(const std::vector<CheckReport>& reports, bool with_runtime = true);
std::string to_text(const std::vector<CheckReport>& reports);
/// 0 when every check that is not report-only passed, 1 otherwise.
int exit_status(const std::vector<CheckReport>& reports);

}  // namespace g2e8::checks
