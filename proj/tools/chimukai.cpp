#include "chimukai/chimukai.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

struct Common {
  bool json = false;
  bool timing = false;
  double tol = 0.0;
  std::size_t max_len = 16;
  unsigned jobs = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "Print JSON reports instead of the summary table");
  cmd->add_flag("--timing", c.timing, "Keep timing_ms in JSON reports");
  cmd->add_option("--tol", c.tol, "Tolerance for gamma scenes")->check(CLI::PositiveNumber);
  cmd->add_option("--max-resolution-length", c.max_len, "Longest free resolution to compute")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs,-j", c.jobs, "Worker threads (0 = hardware concurrency)");
}

chimukai_options to_options(const Common& c, const CLI::App* cmd) {
  chimukai_options o;
  chimukai_options_init(&o);
  if (cmd->count("--tol")) {
    o.has_tol = 1;
    o.tol = c.tol;
  }
  o.max_resolution_length = c.max_len;
  o.jobs = c.jobs;
  return o;
}

int input_error() {
  std::fprintf(stderr, "error: %s\n", chimukai_last_error());
  return 2;
}

int finish(chimukai_run* run, const Common& c) {
  std::fputs(c.json ? chimukai_run_json(run, c.timing) : chimukai_run_summary(run), stdout);
  if (c.json) std::fputc('\n', stdout);
  int code = int(chimukai_run_status(run));
  chimukai_run_free(run);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection-theory checks driven by JSON scenes"};
  app.set_version_flag("--version", std::string(chimukai_version()));
  app.require_subcommand(1);

  Common run_opts, corpus_opts;
  std::string scene_path, corpus_path, explain_path;
  bool write_golden = false;

  auto* run_cmd = app.add_subcommand("run", "Run the scenes of one JSON document");
  run_cmd->add_option("scene", scene_path, "Scene file")->required();
  add_common(run_cmd, run_opts);

  auto* corpus_cmd = app.add_subcommand("corpus", "Run a corpus directory and compare against expected reports");
  corpus_cmd->add_option("dir", corpus_path, "Corpus directory or file")->required();
  corpus_cmd->add_flag("--write-golden", write_golden, "Rewrite expected/<id>.json from this run");
  add_common(corpus_cmd, corpus_opts);

  auto* explain_cmd = app.add_subcommand("explain", "Print the formulas a scene uses");
  explain_cmd->add_option("scene", explain_path, "Scene file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run_cmd) {
    chimukai_document* doc = nullptr;
    if (chimukai_document_load(scene_path.c_str(), &doc) != CHIMUKAI_OK) return input_error();
    chimukai_options o = to_options(run_opts, run_cmd);
    chimukai_run* run = nullptr;
    chimukai_status s = chimukai_run_document(doc, &o, &run);
    chimukai_document_free(doc);
    if (s != CHIMUKAI_OK) return input_error();
    return finish(run, run_opts);
  }
  if (*corpus_cmd) {
    chimukai_options o = to_options(corpus_opts, corpus_cmd);
    chimukai_run* run = nullptr;
    if (chimukai_run_corpus(corpus_path.c_str(), &o, write_golden, &run) != CHIMUKAI_OK) return input_error();
    return finish(run, corpus_opts);
  }
  chimukai_document* doc = nullptr;
  if (chimukai_document_load(explain_path.c_str(), &doc) != CHIMUKAI_OK) return input_error();
  char* text = nullptr;
  chimukai_status s = chimukai_explain(doc, &text);
  chimukai_document_free(doc);
  if (s != CHIMUKAI_OK) return input_error();
  std::fputs(text, stdout);
  chimukai_string_free(text);
  return 0;
}
