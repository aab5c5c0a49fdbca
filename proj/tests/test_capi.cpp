#include "chimukai/chimukai.h"

#include <doctest.h>

#include <string>

TEST_CASE("document lifecycle") {
  chimukai_document* doc = nullptr;
  REQUIRE(chimukai_document_parse(R"({"id":"g","kind":"gamma","order":8})", &doc) == CHIMUKAI_OK);
  CHECK(chimukai_document_count(doc) == 1);
  chimukai_run* run = nullptr;
  REQUIRE(chimukai_run_document(doc, nullptr, &run) == CHIMUKAI_OK);
  CHECK(chimukai_run_status(run) == CHIMUKAI_OK);
  CHECK(chimukai_run_count(run) == 1);
  std::string json = chimukai_run_json(run, 0);
  CHECK(json.front() == '{');
  CHECK(json.find("timing_ms") == std::string::npos);
  CHECK(std::string(chimukai_run_json(run, 1)).find("timing_ms") != std::string::npos);
  CHECK(std::string(chimukai_run_summary(run)).find("1 scenes: 1 passed") != std::string::npos);
  chimukai_run_free(run);
  char* text = nullptr;
  REQUIRE(chimukai_explain(doc, &text) == CHIMUKAI_OK);
  CHECK(std::string(text).size() > 0);
  chimukai_string_free(text);
  chimukai_document_free(doc);
}

TEST_CASE("errors") {
  chimukai_document* doc = nullptr;
  CHECK(chimukai_document_parse("{", &doc) == CHIMUKAI_INPUT_ERROR);
  CHECK(doc == nullptr);
  CHECK(std::string(chimukai_last_error()).size() > 0);
  CHECK(chimukai_document_parse(R"({"id":"a","kind":"nope"})", &doc) == CHIMUKAI_INPUT_ERROR);
  CHECK(chimukai_document_parse(nullptr, &doc) == CHIMUKAI_INVALID_ARGUMENT);
  CHECK(chimukai_document_load("/nonexistent/scene.json", &doc) == CHIMUKAI_INPUT_ERROR);
  CHECK(chimukai_run_status(nullptr) == CHIMUKAI_INVALID_ARGUMENT);
  chimukai_run* run = nullptr;
  CHECK(chimukai_run_corpus("/nonexistent/corpus", nullptr, 0, &run) == CHIMUKAI_INPUT_ERROR);
  CHECK(run == nullptr);
}

TEST_CASE("run status follows the reports") {
  chimukai_document* doc = nullptr;
  REQUIRE(chimukai_document_parse(
              R"({"scenes":[{"id":"ok","kind":"gamma","order":6},)"
              R"({"id":"bad","kind":"multiplicity","ring":{"vars":["x","y"]},"M":{"ideal":["x"]},"N":{"ideal":["y"]},"expect":{"chi":"3"}}]})",
              &doc) == CHIMUKAI_OK);
  chimukai_options o;
  chimukai_options_init(&o);
  o.jobs = 2;
  chimukai_run* run = nullptr;
  REQUIRE(chimukai_run_document(doc, &o, &run) == CHIMUKAI_OK);
  CHECK(chimukai_run_status(run) == CHIMUKAI_CHECK_FAILED);
  CHECK(chimukai_run_count(run) == 2);
  CHECK(std::string(chimukai_run_json(run, 0)).front() == '[');
  chimukai_run_free(run);
  chimukai_document_free(doc);
}

TEST_CASE("shipped corpus passes") {
  chimukai_run* run = nullptr;
  REQUIRE(chimukai_run_corpus(CHIMUKAI_CORPUS_DIR, nullptr, 0, &run) == CHIMUKAI_OK);
  CHECK(chimukai_run_status(run) == CHIMUKAI_OK);
  CHECK(chimukai_run_count(run) > 50);
  chimukai_run_free(run);
}
