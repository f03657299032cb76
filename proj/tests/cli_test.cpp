#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include <slabcy/cache.hpp>
#include <slabcy/input.hpp>
#include <slabcy/run.hpp>

#include "test_util.hpp"

using namespace slabcy;
using slabcy::testing::data_path;

namespace {

RunConfig base_config(const std::string& subcommand, const std::string& input) {
  RunConfig c;
  c.subcommand = subcommand;
  c.input_path = data_path(input);
  c.use_cache = false;
  return c;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("slabcy-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("input parsing") {
  ParsedInput kp1 = parse_input_file(data_path("kp1.txt"));
  CHECK(kp1.polytope.points.size() == 3);
  CHECK(kp1.polytope.dim == 1);
  CHECK_FALSE(kp1.grading.has_value());

  ParsedInput square = parse_input_file(data_path("square.txt"));
  CHECK(square.polytope.points.size() == 4);
  CHECK(square.polytope.dim == 2);

  CHECK_THROWS_WITH_AS(parse_input_text("dim = 1\npoints = [[0],[2]]\n"
                                        "cells = [[0,1]]\nbase_cell = 0\n"),
                       doctest::Contains("NonUnimodularCell"), error);
  CHECK_THROWS_WITH_AS(parse_input_text("points = [[0],[1]]\n"),
                       doctest::Contains("missing 'dim'"), error);
  CHECK_THROWS_WITH_AS(parse_input_text("dim = x\n"), doctest::Contains("line 1"), error);
  CHECK_THROWS_WITH_AS(parse_input_text("dim = 1\nwat = 3\n"),
                       doctest::Contains("unknown key"), error);

  ParsedInput graded = parse_input_text(
      "dim = 1\npoints = [[-1],[0],[1]]\ncells = [[0,1],[1,2]]\nbase_cell = 1\n"
      "grading = [2]  # heavier weight\n");
  REQUIRE(graded.grading.has_value());
  CHECK(*graded.grading == std::vector<std::int64_t>{2});
}

TEST_CASE("slab subcommand compares both routes") {
  RunConfig c = base_config("slab", "kp1.txt");
  c.j = 2;
  c.order = 4;
  c.method = Method::both;
  RunResult r = run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("diff: identical") != std::string::npos);

  auto gs_at = r.output.find("method = gs\n");
  auto omt_at = r.output.find("\n\nmethod = omt\n");
  auto diff_at = r.output.find("\n\ndiff:");
  REQUIRE(gs_at == 0);
  REQUIRE(omt_at != std::string::npos);
  REQUIRE(diff_at != std::string::npos);
  std::string gs_section = r.output.substr(12, omt_at - 12);
  std::string omt_section = r.output.substr(omt_at + 14, diff_at - (omt_at + 14));
  CHECK(gs_section == omt_section);
}

TEST_CASE("ogw subcommand prints the expected series") {
  RunConfig c = base_config("ogw", "kp2.txt");
  c.i = 3;
  c.order = 6;
  RunResult r = run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "1/1 q^[0]\n-2/1 q^[1]\n5/1 q^[2]\n-32/1 q^[3]\n286/1 q^[4]\n-3038/1 q^[5]\n"
        "35870/1 q^[6]");
}

TEST_CASE("verify subcommand exit codes") {
  RunConfig c = base_config("verify", "square.txt");
  c.order = 6;
  RunResult r = run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("machine output is valid JSON") {
  RunConfig c = base_config("ogw", "kp1.txt");
  c.i = 2;
  c.order = 4;
  c.format = OutputFormat::machine;
  RunResult r = run(c);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["order"] == 4);
  CHECK(j["terms"][1]["c"] == "1/1");
  CHECK(j["terms"][1]["e"][0] == 1);

  RunConfig s = base_config("slab", "kp1.txt");
  s.j = 2;
  s.order = 4;
  s.format = OutputFormat::machine;
  RunResult rs = run(s);
  CHECK(rs.exit_code == 0);
  auto js = nlohmann::json::parse(rs.output);
  CHECK(js["identical"] == true);
}

TEST_CASE("input errors exit with code 2") {
  RunConfig missing = base_config("info", "does-not-exist.txt");
  CHECK(run(missing).exit_code == 2);

  RunConfig no_j = base_config("slab", "kp1.txt");
  CHECK(run(no_j).exit_code == 2);

  RunConfig bad_j = base_config("g", "kp1.txt");
  bad_j.j = 9;
  CHECK(run(bad_j).exit_code == 2);

  RunConfig bad_order = base_config("info", "kp1.txt");
  bad_order.order = 0;
  CHECK(run(bad_order).exit_code == 2);

  RunConfig bad_grading = base_config("info", "interval3.txt");
  bad_grading.grading_override = std::vector<std::int64_t>{1, 1};  // wall degree 0
  CHECK(run(bad_grading).exit_code == 2);
}

TEST_CASE("grading override changes the computation consistently") {
  RunConfig c = base_config("g", "kp1.txt");
  c.j = 2;
  c.order = 4;
  RunResult plain = run(c);
  c.grading_override = std::vector<std::int64_t>{2};  // degree doubles, same classes
  c.order = 8;
  RunResult doubled = run(c);
  CHECK(plain.exit_code == 0);
  CHECK(doubled.exit_code == 0);
  CHECK(plain.output == "1/1 q^[1]\n3/2 q^[2]\n10/3 q^[3]\n35/4 q^[4]");
  CHECK(doubled.output == plain.output);
}

TEST_CASE("runs are byte-deterministic") {
  RunConfig c = base_config("verify", "kp1.txt");
  c.order = 5;
  RunResult a = run(c);
  RunResult b = run(c);
  CHECK(a.output == b.output);
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("cache hits are byte-identical to cold runs and safely deletable") {
  TempDir tmp;
  RunConfig c = base_config("ogw", "kp2.txt");
  c.i = 3;
  c.order = 5;
  c.use_cache = true;
  c.cache_dir_override = tmp.path.string();

  RunResult cold = run(c);
  CHECK(cold.exit_code == 0);
  bool wrote = false;
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path))
    if (entry.path().extension() == ".cache") wrote = true;
  CHECK(wrote);

  RunResult hit = run(c);
  CHECK(hit.exit_code == 0);
  CHECK(hit.output == cold.output);

  std::filesystem::remove_all(tmp.path);
  std::filesystem::create_directories(tmp.path);
  RunResult recold = run(c);
  CHECK(recold.output == cold.output);

  // a different order must not collide
  c.order = 4;
  RunResult other = run(c);
  CHECK(other.output != cold.output);
}

TEST_CASE("cache keys separate commands and the payload survives collisions") {
  std::string key = ResultCache::make_key("bytes", 6, "ogw i=3");
  std::string other = ResultCache::make_key("bytes", 6, "ogw i=2");
  CHECK(key != other);

  TempDir tmp;
  ResultCache cache(tmp.path.string());
  CHECK_FALSE(cache.lookup(key).has_value());
  cache.store(key, "payload\nwith lines");
  auto hit = cache.lookup(key);
  REQUIRE(hit.has_value());
  CHECK(*hit == "payload\nwith lines");
  CHECK_FALSE(cache.lookup(other).has_value());
}

TEST_CASE("cache directory resolution order") {
  CHECK(ResultCache::resolve_dir("/a/b/in.txt", "/override") == "/override");
  // without an override, the env var or the input-adjacent default applies
  std::string resolved = ResultCache::resolve_dir("/a/b/in.txt", "");
  if (const char* env = std::getenv("SLABCY_CACHE"); env && *env)
    CHECK(resolved == env);
  else
    CHECK(resolved == "/a/b/.slabcy-cache");
}
