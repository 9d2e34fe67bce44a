// Command-line driver. Talks to the library only through cfl.h.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "cfl/cfl.h"

namespace {

// Exit codes.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknownGroup = 3;
constexpr int kCacheMissing = 4;
constexpr int kCacheCorrupt = 5;
constexpr int kError = 6;

int exit_for(cfl_status s) {
  switch (s) {
    case CFL_OK: return kPass;
    case CFL_UNKNOWN_GROUP: return kUnknownGroup;
    case CFL_CACHE_MISSING: return kCacheMissing;
    case CFL_CACHE_CORRUPT: return kCacheCorrupt;
    case CFL_INVALID_ARGUMENT: return kUsage;
    default: return kError;
  }
}

int report_error(cfl_status s) {
  std::cerr << "cfl: " << cfl_status_name(s) << ": " << cfl_last_error() << "\n";
  return exit_for(s);
}

std::string take(char* s) {
  std::string out(s ? s : "");
  cfl_string_free(s);
  return out;
}

struct Settings {
  std::string format = "text";
  std::string cache_dir;
  unsigned jobs = 1;
  int max_order = 1000;
  bool timing = false;
};

int run_verify(const Settings& st, const std::vector<std::string>& targets) {
  cfl_options* opt = nullptr;
  if (auto s = cfl_options_new(&opt)) return report_error(s);
  cfl_options_set_cache_dir(opt, st.cache_dir.c_str());
  if (auto s = cfl_options_set_jobs(opt, st.jobs)) return cfl_options_free(opt), report_error(s);
  if (auto s = cfl_options_set_max_order(opt, st.max_order)) return cfl_options_free(opt), report_error(s);

  const bool json = st.format == "json";
  bool failed = false, unknown = false;
  std::vector<std::string> docs;
  for (const auto& t : targets) {
    cfl_report* rep = nullptr;
    if (auto s = cfl_verify(t.c_str(), opt, &rep)) {
      cfl_options_free(opt);
      return report_error(s);
    }
    char* text = nullptr;
    auto s = cfl_report_render(rep, json ? CFL_FORMAT_JSON : CFL_FORMAT_TEXT, st.timing, &text);
    if (s) {
      cfl_report_free(rep);
      cfl_options_free(opt);
      return report_error(s);
    }
    std::string doc = take(text);
    if (!json && st.timing) doc += "  time " + std::to_string(cfl_report_seconds(rep)) + " s\n";
    docs.push_back(doc);
    failed = failed || cfl_report_count(rep, CFL_CHECK_FAIL) > 0;
    unknown = unknown || cfl_report_count(rep, CFL_CHECK_UNKNOWN_GROUP) > 0;
    cfl_report_free(rep);
  }
  cfl_options_free(opt);

  if (json && docs.size() > 1) {
    std::cout << "[\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
      std::string d = docs[i];
      if (!d.empty() && d.back() == '\n') d.pop_back();
      std::cout << d << (i + 1 < docs.size() ? ",\n" : "\n");
    }
    std::cout << "]\n";
  } else {
    for (const auto& d : docs) std::cout << d;
  }
  if (unknown) return kUnknownGroup;
  return failed ? kFail : kPass;
}

int run_cache(const Settings& st, const std::string& action, int degree) {
  if (st.cache_dir.empty()) {
    std::cerr << "cfl: cache: no cache directory (use --cache-dir, CFL_CACHE_DIR or the config file)\n";
    return kUsage;
  }
  const char* dir = st.cache_dir.c_str();
  if (action == "path") {
    char* p = nullptr;
    if (auto s = cfl_cache_path(dir, degree, &p)) return report_error(s);
    std::cout << take(p) << "\n";
    return kPass;
  }
  std::uint64_t order = 0;
  cfl_status s = action == "build" ? cfl_cache_build(dir, degree, st.jobs, &order) : cfl_cache_verify(dir, degree, &order);
  if (s) return report_error(s);
  std::cout << action << " d=" << degree << " order=" << order << " ok\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Cremona subgroups with a fixed point"};
  app.set_version_flag("--version", std::string(cfl_version()));
  Settings st;
  app.set_config("--config", "", "key=value file (format, cache-dir, jobs, max-order); flags win");
  app.add_option("--format", st.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", st.cache_dir, "Weyl closure cache directory")->envname("CFL_CACHE_DIR");
  app.add_option("--jobs", st.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-order", st.max_order, "largest subgroup order enumerated")->check(CLI::PositiveNumber);
  app.add_flag("--timing", st.timing, "include timings (kept out of the checked payload)");
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> targets;
  auto* verify = app.add_subcommand("verify", "run verification targets ('all' for every target)");
  verify->add_option("target", targets, "target names")->required();

  std::string action;
  int degree = 2;
  auto* cache = app.add_subcommand("cache", "Weyl closure cache");
  cache->add_option("action", action, "build, verify or path")->required()->check(CLI::IsMember({"build", "verify", "path"}));
  cache->add_option("--degree", degree, "degree 2..7")->check(CLI::Range(2, 7));

  auto* list = app.add_subcommand("targets", "list verification targets");

  std::string scene;
  auto* sc = app.add_subcommand("scene", "identify the group of a scene file or shipped scene");
  sc->add_option("scene", scene, "path or shipped name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  if (*list) {
    for (std::size_t i = 0; i < cfl_target_count(); ++i) std::cout << cfl_target_name(i) << "\n";
    return kPass;
  }
  if (*verify) {
    if (targets.size() == 1 && targets[0] == "all") {
      targets.clear();
      for (std::size_t i = 0; i < cfl_target_count(); ++i) targets.push_back(cfl_target_name(i));
    }
    return run_verify(st, targets);
  }
  if (*cache) return run_cache(st, action, degree);
  if (*sc) {
    char* label = nullptr;
    int order = 0;
    if (auto s = cfl_scene_identify(scene.c_str(), st.max_order, &label, &order)) return report_error(s);
    std::string l = take(label);
    if (st.format == "json")
      std::cout << "{\"scene\": \"" << scene << "\", \"order\": " << order << ", \"group\": \"" << l << "\"}\n";
    else
      std::cout << scene << ": order " << order << ", " << l << "\n";
    return kPass;
  }
  return kUsage;
}
