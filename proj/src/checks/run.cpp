#include "g2e8/checks.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace g2e8::checks {

std::string_view status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ReportOnly: return "report-only";
  }
  return "fail";
}

std::vector<ManifestEntry> parse_manifest(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(fmt::format("manifest is not valid JSON: {}", e.what()));
  }
  if (!doc.is_array()) throw UsageError("manifest must be a JSON array");
  std::vector<ManifestEntry> out;
  for (const auto& item : doc) {
    if (!item.is_object()) throw UsageError("manifest entries must be objects");
    for (const auto& [key, value] : item.items())
      if (key != "id" && key != "params") throw UsageError(fmt::format("unknown manifest key '{}'", key));
    if (!item.contains("id") || !item["id"].is_string()) throw UsageError("manifest entry without a string id");
    ManifestEntry e{item["id"].get<std::string>(), {}};
    const CheckDef* def = find_check(e.id);
    if (!def) throw UsageError(fmt::format("unknown check id '{}'", e.id));
    if (item.contains("params")) {
      const auto& p = item["params"];
      if (!p.is_object()) throw UsageError(fmt::format("params of '{}' must be an object", e.id));
      for (const auto& [key, value] : p.items()) {
        if (std::find(def->param_keys.begin(), def->param_keys.end(), key) == def->param_keys.end())
          throw UsageError(fmt::format("check '{}' has no parameter '{}'", e.id, key));
        if (!value.is_number_integer())
          throw UsageError(fmt::format("parameter '{}' of '{}' must be an integer", key, e.id));
        e.params[key] = value.get<int>();
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ManifestEntry> default_manifest() {
  std::vector<ManifestEntry> out;
  for (const auto& c : registry())
    if (c.in_default) out.push_back({c.id, {}});
  return out;
}

CheckReport run_one(const ManifestEntry& entry, const RunConfig& cfg) {
  const CheckDef* def = find_check(entry.id);
  if (!def) throw UsageError(fmt::format("unknown check id '{}'", entry.id));
  Params p = entry.params;
  if (def->uses_degree && !p.count("D")) p["D"] = cfg.degree;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = def->body(p);
  const auto t1 = std::chrono::steady_clock::now();
  return {def->id,         def->location, o.status, std::move(o.expected), std::move(o.computed), o.truncation,
          std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

std::vector<CheckReport> run(const std::vector<ManifestEntry>& manifest, const RunConfig& cfg) {
  if (cfg.degree < 1) throw UsageError("truncation degree must be >= 1");
  for (const auto& e : manifest)
    if (!find_check(e.id)) throw UsageError(fmt::format("unknown check id '{}'", e.id));
  std::vector<CheckReport> out(manifest.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < manifest.size();) {
      try {
        out[k] = run_one(manifest[k], cfg);
      } catch (...) {
        std::lock_guard lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        next = manifest.size();
      }
    }
  };
  const int jobs = std::clamp<int>(cfg.jobs, 1, std::max<int>(1, static_cast<int>(manifest.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

std::string to_json(const std::vector<CheckReport>& reports, bool with_runtime) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["paper_location"] = r.location;
    j["status"] = std::string(status_str(r.status));
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["truncation"] = r.truncation ? nlohmann::ordered_json(*r.truncation) : nlohmann::ordered_json(nullptr);
    j["runtime_ms"] = with_runtime ? nlohmann::ordered_json(std::round(r.runtime_ms * 1000) / 1000)
                                   : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string to_text(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += fmt::format("{:<12} {:<30} {}", status_str(r.status), r.id, r.computed);
    if (r.truncation) out += fmt::format(" [D={}]", *r.truncation);
    out += fmt::format(" ({:.0f} ms)\n", r.runtime_ms);
  }
  return out;
}

int exit_status(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return 1;
  return 0;
}

}  // namespace g2e8::checks
