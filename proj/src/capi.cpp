#include "chimukai/chimukai.h"

#include "chimukai/error.hpp"
#include "chimukai/scene.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

struct chimukai_document {
  std::vector<chimukai::Scene> scenes;
  bool single = true;
};

struct chimukai_run {
  std::vector<chimukai::Json> reports;
  bool single = false;
  int code = 0;
  std::string json;
  std::string summary;
};

namespace {

thread_local std::string last_error;

chimukai_status fail(chimukai_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

/// Runs f, mapping exceptions to status codes.
template <class F>
chimukai_status guarded(F f) {
  try {
    last_error.clear();
    return f();
  } catch (const chimukai::Error& e) {
    return fail(e.kind() == chimukai::ErrorKind::Internal ? CHIMUKAI_INTERNAL_ERROR : CHIMUKAI_INPUT_ERROR, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(CHIMUKAI_INPUT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CHIMUKAI_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(CHIMUKAI_INTERNAL_ERROR, e.what());
  }
}

chimukai::RunOptions convert(const chimukai_options* opts) {
  chimukai::RunOptions o;
  if (!opts) return o;
  if (opts->has_tol) o.tol = opts->tol;
  if (opts->max_resolution_length) o.max_resolution_length = opts->max_resolution_length;
  o.jobs = opts->jobs;
  return o;
}

chimukai_status status_of(int code) {
  return code == 0 ? CHIMUKAI_OK : code == 1 ? CHIMUKAI_CHECK_FAILED : CHIMUKAI_INPUT_ERROR;
}

}  // namespace

extern "C" {

void chimukai_options_init(chimukai_options* opts) {
  if (!opts) return;
  opts->tol = 0.0;
  opts->has_tol = 0;
  opts->max_resolution_length = 16;
  opts->jobs = 0;
}

const char* chimukai_version(void) { return "0.1.0"; }

const char* chimukai_last_error(void) { return last_error.c_str(); }

chimukai_status chimukai_document_parse(const char* json, chimukai_document** out) {
  if (!json || !out) return fail(CHIMUKAI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto doc = std::make_unique<chimukai_document>();
    chimukai::Json j = chimukai::Json::parse(json);
    doc->single = !(j.is_object() && j.contains("scenes"));
    doc->scenes = chimukai::parse_scenes(j);
    *out = doc.release();
    return CHIMUKAI_OK;
  });
}

chimukai_status chimukai_document_load(const char* path, chimukai_document** out) {
  if (!path || !out) return fail(CHIMUKAI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto doc = std::make_unique<chimukai_document>();
    doc->scenes = chimukai::load_scenes(path);
    doc->single = doc->scenes.size() == 1;
    *out = doc.release();
    return CHIMUKAI_OK;
  });
}

size_t chimukai_document_count(const chimukai_document* doc) { return doc ? doc->scenes.size() : 0; }

void chimukai_document_free(chimukai_document* doc) { delete doc; }

chimukai_status chimukai_explain(const chimukai_document* doc, char** out) {
  if (!doc || !out) return fail(CHIMUKAI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string text;
    for (const auto& s : doc->scenes) text += chimukai::explain(s);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return CHIMUKAI_OK;
  });
}

void chimukai_string_free(char* s) { std::free(s); }

chimukai_status chimukai_run_document(const chimukai_document* doc, const chimukai_options* opts, chimukai_run** out) {
  if (!doc || !out) return fail(CHIMUKAI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto run = std::make_unique<chimukai_run>();
    run->reports = chimukai::run_scenes(doc->scenes, convert(opts));
    run->single = doc->single && run->reports.size() == 1;
    run->code = chimukai::exit_code(run->reports);
    *out = run.release();
    return CHIMUKAI_OK;
  });
}

chimukai_status chimukai_run_corpus(const char* path, const chimukai_options* opts, int write_golden,
                                    chimukai_run** out) {
  if (!path || !out) return fail(CHIMUKAI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto result = chimukai::run_corpus(path, convert(opts), write_golden != 0);
    auto run = std::make_unique<chimukai_run>();
    run->reports = std::move(result.reports);
    run->code = result.exit_code;
    *out = run.release();
    return CHIMUKAI_OK;
  });
}

chimukai_status chimukai_run_status(const chimukai_run* run) {
  if (!run) return fail(CHIMUKAI_INVALID_ARGUMENT, "null argument");
  return status_of(run->code);
}

size_t chimukai_run_count(const chimukai_run* run) { return run ? run->reports.size() : 0; }

const char* chimukai_run_json(chimukai_run* run, int include_timing) {
  if (!run) return nullptr;
  chimukai::Json out = chimukai::Json::array();
  for (const auto& r : run->reports) out.push_back(include_timing ? r : chimukai::without_timing(r));
  run->json = (run->single ? out.at(0) : out).dump(2);
  return run->json.c_str();
}

const char* chimukai_run_summary(chimukai_run* run) {
  if (!run) return nullptr;
  run->summary = chimukai::summary_table(run->reports);
  return run->summary.c_str();
}

void chimukai_run_free(chimukai_run* run) { delete run; }

}  // extern "C"
