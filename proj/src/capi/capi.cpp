#include "cfl/cfl.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <string>

#include "cfl/error.hpp"
#include "cfl/lattice/weyl.hpp"
#include "cfl/lefschetz/lefschetz.hpp"
#include "cfl/report/report.hpp"
#include "cfl/surfaces/scene.hpp"

struct cfl_options {
  cfl::VerifyOptions opt;
};

struct cfl_report {
  cfl::VerificationReport rep;
};

namespace {

thread_local std::string g_error;

cfl_status fail(cfl_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
cfl_status guarded(F&& f) {
  try {
    f();
    g_error.clear();
    return CFL_OK;
  } catch (const cfl::Error& e) {
    return fail(static_cast<cfl_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CFL_INTERNAL, "out of memory");
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(CFL_IO_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(CFL_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* cfl_version(void) { return "0.1.0"; }

const char* cfl_status_name(cfl_status s) {
  if (s == CFL_OK) return "ok";
  if (s == CFL_INTERNAL) return "internal";
  if (s >= 1 && s <= 16) return cfl::error_code_name(static_cast<cfl::ErrorCode>(static_cast<int>(s)));
  return "unknown";
}

const char* cfl_last_error(void) { return g_error.c_str(); }

void cfl_string_free(char* s) { std::free(s); }

cfl_status cfl_options_new(cfl_options** out) {
  if (!out) return fail(CFL_INVALID_ARGUMENT, "null output");
  return guarded([&] { *out = new cfl_options(); });
}

void cfl_options_free(cfl_options* o) { delete o; }

cfl_status cfl_options_set_cache_dir(cfl_options* o, const char* dir) {
  if (!o) return fail(CFL_INVALID_ARGUMENT, "null options");
  if (!dir || !*dir) o->opt.cache_dir.reset();
  else o->opt.cache_dir = std::filesystem::path(dir);
  return CFL_OK;
}

cfl_status cfl_options_set_jobs(cfl_options* o, unsigned jobs) {
  if (!o) return fail(CFL_INVALID_ARGUMENT, "null options");
  if (jobs == 0) return fail(CFL_INVALID_ARGUMENT, "jobs must be positive");
  o->opt.jobs = jobs;
  return CFL_OK;
}

cfl_status cfl_options_set_max_order(cfl_options* o, int max_order) {
  if (!o) return fail(CFL_INVALID_ARGUMENT, "null options");
  if (max_order < 1) return fail(CFL_INVALID_ARGUMENT, "max-order must be positive");
  o->opt.max_order = max_order;
  return CFL_OK;
}

size_t cfl_target_count(void) { return cfl::verify_targets().size(); }

const char* cfl_target_name(size_t i) {
  const auto& t = cfl::verify_targets();
  return i < t.size() ? t[i].c_str() : nullptr;
}

cfl_status cfl_verify(const char* target, const cfl_options* opts, cfl_report** out) {
  if (!target || !out) return fail(CFL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<cfl_report>();
    r->rep = cfl::verify(target, opts ? opts->opt : cfl::VerifyOptions{});
    *out = r.release();
  });
}

cfl_status cfl_report_from_json(const char* text, cfl_report** out) {
  if (!text || !out) return fail(CFL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<cfl_report>();
    r->rep = cfl::report_from_json(text);
    *out = r.release();
  });
}

void cfl_report_free(cfl_report* r) { delete r; }

int cfl_report_passed(const cfl_report* r) { return r && r->rep.passed() ? 1 : 0; }

int cfl_report_count(const cfl_report* r, cfl_check_status s) {
  if (!r || s < CFL_CHECK_PASS || s > CFL_CHECK_UNKNOWN_GROUP) return -1;
  return r->rep.count(static_cast<cfl::CheckStatus>(static_cast<int>(s)));
}

double cfl_report_seconds(const cfl_report* r) { return r ? r->rep.seconds : 0.0; }

cfl_status cfl_report_render(const cfl_report* r, cfl_format fmt, int with_timing, char** out) {
  if (!r || !out) return fail(CFL_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (fmt == CFL_FORMAT_JSON) *out = dup(cfl::report_to_json(r->rep, with_timing != 0));
    else if (fmt == CFL_FORMAT_TEXT) *out = dup(cfl::report_to_text(r->rep));
    else throw cfl::Error(cfl::ErrorCode::invalid_argument, "unknown format");
  });
}

cfl_status cfl_cache_path(const char* dir, int degree, char** out) {
  if (!dir || !out) return fail(CFL_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(cfl::weyl_cache_file(dir, degree).string()); });
}

cfl_status cfl_cache_build(const char* dir, int degree, unsigned jobs, uint64_t* order) {
  if (!dir) return fail(CFL_INVALID_ARGUMENT, "null directory");
  return guarded([&] {
    auto w = cfl::weyl_closure(degree, jobs == 0 ? 1 : jobs);
    cfl::write_weyl_cache(w, cfl::weyl_cache_file(dir, degree));
    if (order) *order = w.order();
  });
}

cfl_status cfl_cache_verify(const char* dir, int degree, uint64_t* order) {
  if (!dir) return fail(CFL_INVALID_ARGUMENT, "null directory");
  return guarded([&] {
    auto file = cfl::weyl_cache_file(dir, degree);
    auto w = cfl::read_weyl_cache(file);
    if (w.degree() != degree) throw cfl::Error(cfl::ErrorCode::cache_corrupt, file.string() + ": degree mismatch");
    if (order) *order = w.order();
  });
}

cfl_status cfl_scene_identify(const char* scene, int max_order, char** label, int* order) {
  if (!scene || !label) return fail(CFL_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::filesystem::path p(scene);
    cfl::Scene s = std::filesystem::exists(p) ? cfl::load_scene(p) : cfl::load_shipped_scene(scene);
    auto g = s.group(max_order);
    std::string l = cfl::group_label(g.table());
    if (order) *order = g.order();
    *label = dup(l);
  });
}

}  // extern "C"
