#include "chimukai/error.hpp"
#include "chimukai/scene.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace chimukai;
namespace fs = std::filesystem;

namespace {

Json scene(const char* text) { return Json::parse(text); }

Json run_one(const char* text) {
  auto scenes = parse_scenes(scene(text));
  REQUIRE(scenes.size() == 1);
  return run_scene(scenes[0]);
}

bool all_checks_pass(const Json& report) {
  for (const auto& c : report.at("checks"))
    if (!c.at("pass").get<bool>()) return false;
  return true;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("chimukai-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST_CASE("multiplicity scene on transverse lines") {
  Json r = run_one(R"({"id":"t","kind":"multiplicity","ring":{"vars":["x","y"]},"M":{"ideal":["x"]},"N":{"ideal":["y"]}})");
  CHECK(r.at("status") == "PASS");
  CHECK(r.at("result").at("chi") == 1);
  CHECK(r.at("result").at("classification") == "PROPER");
  CHECK(all_checks_pass(r));
  CHECK(r.at("checks").size() > 3);
}

TEST_CASE("hrr scene on P2") {
  Json r = run_one(R"({"id":"h","kind":"hrr","space":[2],"E":{"line":[1]},"F":{"line":[3]}})");
  CHECK(r.at("status") == "PASS");
  CHECK(r.at("result").at("mukai_pairing") == "6");
  CHECK(r.at("result").at("euler_pairing") == 6);
}

TEST_CASE("gamma scene") {
  Json r = run_one(R"({"id":"g","kind":"gamma","order":12,"tol":1e-9})");
  CHECK(r.at("status") == "PASS");
  CHECK(r.at("result").contains("max_error"));
  CHECK(r.at("result").at("max_error").get<double>() < 1e-9);
}

TEST_CASE("report layout is stable") {
  Json r = run_one(R"({"id":"t","kind":"multiplicity","ring":{"vars":["x","y"]},"M":{"ideal":["x"]},"N":{"ideal":["y"]}})");
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"id", "kind", "inputs", "result", "checks", "flags", "status", "timing_ms"});
  auto stripped = without_timing(r);
  CHECK(!stripped.contains("timing_ms"));
  for (const auto& c : r.at("checks")) {
    CHECK(c.contains("name"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("lhs"));
    CHECK(c.contains("rhs"));
  }
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(parse_scenes(scene(R"({"id":"a","kind":"nope"})")), Error);
  CHECK_THROWS_AS(parse_scenes(scene(R"({"kind":"gamma"})")), Error);
  CHECK_THROWS_AS(parse_scenes(scene(R"({"id":"a","kind":"hrr","space":[2]})")), Error);
  CHECK_THROWS_AS(parse_scenes(scene(R"({"id":"a","kind":"gamma","colour":1})")), Error);
  CHECK_THROWS_AS(parse_scenes(scene(R"({"scenes":[{"id":"a","kind":"gamma"},{"id":"a","kind":"gamma"}]})")), Error);
  CHECK_THROWS_AS(parse_scenes(scene("[1, 2]")), Error);
}

TEST_CASE("module rejections become ERROR reports") {
  Json r = run_one(R"({"id":"e","kind":"multiplicity","ring":{"vars":["x","y"]},"M":{"ideal":["x"]},"N":{"ideal":["x","y-1"]}})");
  CHECK(r.at("status") == "ERROR");
  CHECK(r.contains("error"));
  CHECK(exit_code({r}) == 2);
  Json bad = run_one(R"({"id":"p","kind":"residue","ring":{"vars":["x","y"]},"f":"x^2"})");
  CHECK(bad.at("status") == "ERROR");
}

TEST_CASE("failing expectations mark the report failed") {
  Json r = run_one(
      R"({"id":"f","kind":"multiplicity","ring":{"vars":["x","y"]},"M":{"ideal":["x"]},"N":{"ideal":["y"]},"expect":{"chi":"2"}})");
  CHECK(r.at("status") == "FAIL");
  CHECK(!report_passed(r));
  CHECK(exit_code({r}) == 1);
}

TEST_CASE("exit codes") {
  CHECK(exit_code({}) == 0);
  Json pass = Json{{"status", "PASS"}}, fail = Json{{"status", "FAIL"}}, err = Json{{"status", "ERROR"}};
  CHECK(exit_code({pass, pass}) == 0);
  CHECK(exit_code({pass, fail}) == 1);
  CHECK(exit_code({fail, err}) == 2);
}

TEST_CASE("empty corpus") {
  TempDir dir;
  auto res = run_corpus(dir.path.string());
  CHECK(res.reports.empty());
  CHECK(res.exit_code == 0);
  CHECK(summary_table(res.reports).find("0 scenes") != std::string::npos);
  CHECK_THROWS_AS(run_corpus((dir.path / "missing").string()), Error);
}

TEST_CASE("golden files round trip") {
  TempDir dir;
  dir.write("a.json",
            R"({"scenes":[{"id":"t","kind":"multiplicity","ring":{"vars":["x","y"]},"M":{"ideal":["x"]},"N":{"ideal":["y"]}},)"
            R"({"id":"h","kind":"hrr","space":[1],"E":{"line":[0]},"F":{"line":[2]}}]})");
  auto first = run_corpus(dir.path.string(), {}, true);
  CHECK(first.exit_code == 0);
  CHECK(fs::exists(dir.path / "expected" / "t.json"));
  CHECK(fs::exists(dir.path / "expected" / "h.json"));
  auto second = run_corpus(dir.path.string());
  CHECK(second.exit_code == 0);
  for (const auto& r : second.reports) CHECK(r.at("checks").back().at("name") == "golden");
  dir.write("expected/h.json", "{}\n");
  auto third = run_corpus(dir.path.string());
  CHECK(third.exit_code == 1);
  CHECK(third.reports[1].at("status") == "FAIL");
}

TEST_CASE("determinism and order under concurrency") {
  auto scenes = load_scenes(CHIMUKAI_CORPUS_DIR "/multiplicity.json");
  RunOptions serial;
  serial.jobs = 1;
  RunOptions wide;
  wide.jobs = 8;
  auto a = run_scenes(scenes, serial), b = run_scenes(scenes, wide);
  REQUIRE(a.size() == scenes.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].at("id") == scenes[i].id);
    CHECK(without_timing(a[i]).dump(2) == without_timing(b[i]).dump(2));
  }
}

TEST_CASE("explain lists formulas") {
  auto scenes = parse_scenes(scene(R"({"id":"g","kind":"gamma"})"));
  auto text = explain(scenes[0]);
  CHECK(!text.empty());
  CHECK(text.find("g") != std::string::npos);
}

TEST_CASE("class parsing") {
  CohRing p2 = CohRing::projective_space(2);
  CHECK(parse_class(p2, "1 + 2*h + h^2") ==
        RatClass::one(p2) + Rational(2) * RatClass::hyperplane(p2, 0) + RatClass::monomial(p2, {2}, Rational(1)));
  CohRing q({1, 1});
  CHECK(parse_class(q, "h1*h2") == RatClass::monomial(q, {1, 1}, Rational(1)));
  CHECK(parse_class(q, "h1^2").is_zero());
  CHECK_THROWS_AS(parse_class(q, "h3"), Error);
}

TEST_CASE("golden floats tolerate rounding noise") {
  TempDir dir;
  dir.write("g.json", R"({"id":"g","kind":"gamma","order":6})");
  REQUIRE(run_corpus(dir.path.string(), {}, true).exit_code == 0);
  Json golden;
  std::ifstream(dir.path / "expected" / "g.json") >> golden;
  double e = golden["result"]["max_error"].get<double>();
  golden["result"]["max_error"] = e * (1 + 1e-12) + 1e-15;
  std::ofstream(dir.path / "expected" / "g.json") << golden.dump(2) << "\n";
  CHECK(run_corpus(dir.path.string()).exit_code == 0);
  golden["result"]["max_error"] = e + 1e-3;
  std::ofstream(dir.path / "expected" / "g.json") << golden.dump(2) << "\n";
  CHECK(run_corpus(dir.path.string()).exit_code == 1);
}
