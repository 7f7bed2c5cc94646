#include "g2e8/checks.hpp"
#include "g2e8/e8data.hpp"
#include "g2e8/weyl.hpp"
#include "g2e8/zeta/named.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace g2e8;
using symra::RatFunc;

namespace {

constexpr int kExitFail = 1, kExitUsage = 2, kExitInternal = 3;

std::vector<int> index_set(const std::string& text) {
  if (text == "M2") return e8data::kLeviM2;
  if (text == "M1") return e8data::kLeviM1;
  std::vector<int> out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    int i = 0;
    try {
      i = std::stoi(tok);
    } catch (const std::exception&) {
      throw checks::UsageError(fmt::format("bad simple index '{}'", tok));
    }
    if (i < 1 || i > 8) throw checks::UsageError(fmt::format("simple index {} out of range 1..8", i));
    out.push_back(i);
  }
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw checks::UsageError(fmt::format("cannot write to '{}'", path));
  f << text;
  if (!f) throw checks::UsageError(fmt::format("write to '{}' failed", path));
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw checks::UsageError(fmt::format("cannot read manifest '{}'", path));
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g2e8: root-system, character and zeta-function checks for the G2 x E8 doubling integral"};
  std::string manifest_path, output;
  std::vector<std::string> check_ids;
  bool all = false, json = false, list = false;
  checks::RunConfig cfg;
  app.add_option("--manifest", manifest_path, "JSON manifest [{\"id\": ..., \"params\": {...}}]");
  app.add_option("--check", check_ids, "check id to run (repeatable)");
  app.add_flag("--all", all, "run every check of the default suite");
  app.add_option("--degree", cfg.degree, "truncation x-degree for checks that take D")->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "emit JSON reports");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "write the report here instead of stdout");
  app.add_flag("--list", list, "list registered checks and exit");

  app.fallthrough();
  auto* weyl_cmd = app.add_subcommand("weyl-enumerate", "minimal double coset representatives in W(E8)");
  std::string left = "M2", right = "4,7";
  weyl_cmd->add_option("--left", left, "left parabolic: M1, M2 or a comma list of simple indices");
  weyl_cmd->add_option("--right", right, "right parabolic: comma list of simple indices");

  auto* series_cmd = app.add_subcommand("series", "x-expansion of a named rational function");
  std::string series_id;
  std::map<std::string, int> series_params;
  series_cmd->add_option("id", series_id, "Z, I0, z0, N, Z1Z2, P0, J0c, J1c, J2c, ...")->required();
  series_cmd->add_option("--param", series_params, "parameter as key value, e.g. --param n 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (list) {
      std::string out;
      for (const auto& c : checks::registry())
        out += fmt::format("{:<30} {}{}\n", c.id, c.location, c.in_default ? "" : " (not in the default suite)");
      write_output(out, output);
      return 0;
    }
    if (*weyl_cmd) {
      RootSystem rs(RootSystemSpec::e8());
      WeylGroup W(rs);
      auto reps = W.enumerate_double_cosets(index_set(left), index_set(right));
      if (json) {
        nlohmann::ordered_json j;
        j["count"] = reps.size();
        j["words"] = nlohmann::ordered_json::array();
        for (const auto& w : reps) j["words"].push_back(word_str(W.reduced_word(w)));
        write_output(j.dump(2) + "\n", output);
      } else {
        std::string out = fmt::format("{}\n", reps.size());
        for (const auto& w : reps) out += word_str(W.reduced_word(w)) + "\n";
        write_output(out, output);
      }
      return 0;
    }
    if (*series_cmd) {
      RatFunc f;
      try {
        f = zeta::named(series_id, series_params);
      } catch (const Error& e) {
        throw checks::UsageError(e.what());
      }
      write_output(f.series("x", cfg.degree).str() + "\n", output);
      return 0;
    }

    std::vector<checks::ManifestEntry> manifest;
    if (!manifest_path.empty()) manifest = checks::parse_manifest(read_file(manifest_path));
    for (const auto& id : check_ids) {
      if (!checks::find_check(id)) throw checks::UsageError(fmt::format("unknown check id '{}'", id));
      manifest.push_back({id, {}});
    }
    if (all || (manifest_path.empty() && check_ids.empty())) {
      auto d = checks::default_manifest();
      manifest.insert(manifest.end(), d.begin(), d.end());
    }
    auto reports = checks::run(manifest, cfg);
    write_output(json ? checks::to_json(reports) + "\n" : checks::to_text(reports), output);
    return checks::exit_status(reports) == 0 ? 0 : kExitFail;
  } catch (const checks::UsageError& e) {
    std::cerr << "g2e8: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "g2e8: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
