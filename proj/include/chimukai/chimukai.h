#ifndef CHIMUKAI_H
#define CHIMUKAI_H

#include <stddef.h>

#if defined(CHIMUKAI_BUILDING_LIBRARY)
#define CHIMUKAI_API __attribute__((visibility("default")))
#else
#define CHIMUKAI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chimukai_status {
  CHIMUKAI_OK = 0,
  /// A run finished and some cross-check failed.
  CHIMUKAI_CHECK_FAILED = 1,
  /// Unreadable file, malformed JSON, schema violation, or input rejected by a module.
  CHIMUKAI_INPUT_ERROR = 2,
  CHIMUKAI_INTERNAL_ERROR = 3,
  CHIMUKAI_INVALID_ARGUMENT = 4
} chimukai_status;

/// Parsed scene document (one scene or a list).
typedef struct chimukai_document chimukai_document;
/// Reports of a run, in input order.
typedef struct chimukai_run chimukai_run;

typedef struct chimukai_options {
  /// Tolerance override for gamma scenes; used when has_tol is nonzero.
  double tol;
  int has_tol;
  size_t max_resolution_length;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs;
} chimukai_options;

CHIMUKAI_API void chimukai_options_init(chimukai_options* opts);

CHIMUKAI_API const char* chimukai_version(void);
/// Message of the last failing call on this thread; empty when none.
CHIMUKAI_API const char* chimukai_last_error(void);

CHIMUKAI_API chimukai_status chimukai_document_parse(const char* json, chimukai_document** out);
CHIMUKAI_API chimukai_status chimukai_document_load(const char* path, chimukai_document** out);
CHIMUKAI_API size_t chimukai_document_count(const chimukai_document* doc);
CHIMUKAI_API void chimukai_document_free(chimukai_document* doc);

/// Formulas used by the document's scenes. Free with chimukai_string_free.
CHIMUKAI_API chimukai_status chimukai_explain(const chimukai_document* doc, char** out);
CHIMUKAI_API void chimukai_string_free(char* s);

/// opts may be NULL for defaults.
CHIMUKAI_API chimukai_status chimukai_run_document(const chimukai_document* doc, const chimukai_options* opts,
                                                   chimukai_run** out);
/// Runs a corpus directory or file; write_golden refreshes expected/<id>.json.
CHIMUKAI_API chimukai_status chimukai_run_corpus(const char* path, const chimukai_options* opts, int write_golden,
                                                 chimukai_run** out);

/// CHIMUKAI_OK, CHIMUKAI_CHECK_FAILED, or CHIMUKAI_INPUT_ERROR for the run as a whole.
CHIMUKAI_API chimukai_status chimukai_run_status(const chimukai_run* run);
CHIMUKAI_API size_t chimukai_run_count(const chimukai_run* run);
/// Reports as a JSON array (a single object for one-scene documents);
/// owned by the run. Timing fields are dropped unless include_timing.
CHIMUKAI_API const char* chimukai_run_json(chimukai_run* run, int include_timing);
/// Aligned text table; owned by the run.
CHIMUKAI_API const char* chimukai_run_summary(chimukai_run* run);
CHIMUKAI_API void chimukai_run_free(chimukai_run* run);

#ifdef __cplusplus
}
#endif

#endif
