#pragma once

#include "chimukai/cohomology.hpp"
#include "chimukai/resolutions.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chimukai {

using Json = nlohmann::ordered_json;

struct RunOptions {
  /// Overrides the tolerance of Γ̂ scenes.
  std::optional<double> tol;
  std::size_t max_resolution_length = 16;
  /// Worker threads for corpus runs; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

struct Scene {
  std::string id;
  std::string kind;
  Json doc;
};

/// Scenes of a document: a single scene object or {"scenes": [...]}.
/// Throws Error(InvalidInput) on schema violations.
std::vector<Scene> parse_scenes(const Json& doc);
std::vector<Scene> load_scenes(const std::string& path);

/// Report fields: id, kind, inputs, result, checks, flags, status, timing_ms.
/// status is PASS, FAIL, or ERROR (input rejected by a module).
Json run_scene(const Scene& scene, const RunOptions& opts = {});

bool report_passed(const Json& report);
Json without_timing(const Json& report);

/// Formulas used by the scene kind, one per line.
std::string explain(const Scene& scene);

struct CorpusResult {
  std::vector<Json> reports;
  /// 0 all pass, 1 some check failed, 2 some input rejected.
  int exit_code = 0;
};

/// Runs every *.json file of `dir` in name order. Reports are compared with
/// dir/expected/<id>.json when present; write_golden refreshes those files.
CorpusResult run_corpus(const std::string& dir, const RunOptions& opts = {}, bool write_golden = false);
/// Runs scenes concurrently; reports keep the input order.
std::vector<Json> run_scenes(const std::vector<Scene>& scenes, const RunOptions& opts);
int exit_code(const std::vector<Json>& reports);

/// Aligned text table: id, kind, status, checks passed, headline result.
std::string summary_table(const std::vector<Json>& reports);

/// Cohomology class from text in h (one factor) or h1..hk.
RatClass parse_class(const CohRing& ring, const std::string& text);
SheafDescriptor parse_descriptor(const Json& j);

}  // namespace chimukai
