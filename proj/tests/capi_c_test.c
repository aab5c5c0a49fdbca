#include "chimukai/chimukai.h"

#include <stdio.h>
#include <string.h>

int main(void) {
  chimukai_document* doc = NULL;
  chimukai_run* run = NULL;
  chimukai_options opts;
  const char* scene = "{\"id\":\"c\",\"kind\":\"hrr\",\"space\":[2],\"E\":{\"line\":[1]},\"F\":{\"line\":[3]}}";
  const char* json;

  chimukai_options_init(&opts);
  opts.jobs = 1;
  if (chimukai_document_parse(scene, &doc) != CHIMUKAI_OK) {
    fprintf(stderr, "parse: %s\n", chimukai_last_error());
    return 1;
  }
  if (chimukai_run_document(doc, &opts, &run) != CHIMUKAI_OK) {
    fprintf(stderr, "run: %s\n", chimukai_last_error());
    return 1;
  }
  json = chimukai_run_json(run, 0);
  if (chimukai_run_status(run) != CHIMUKAI_OK || strstr(json, "\"mukai_pairing\": \"6\"") == NULL) {
    fprintf(stderr, "unexpected report:\n%s\n", json);
    return 1;
  }
  chimukai_run_free(run);
  chimukai_document_free(doc);
  if (chimukai_document_parse("not json", &doc) != CHIMUKAI_INPUT_ERROR) return 1;
  printf("ok %s\n", chimukai_version());
  return 0;
}
