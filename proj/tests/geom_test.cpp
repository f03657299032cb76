#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include <slabcy/fan.hpp>

#include "test_util.hpp"

using namespace slabcy;
using slabcy::testing::load;

namespace {

PolytopeInput kp1_input() {
  return {1, {{-1}, {0}, {1}}, {{0, 1}, {1, 2}}, 1};
}

PolytopeInput kp2_input() {
  return {2, {{1, 0}, {0, 1}, {0, 0}, {-1, -1}}, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}}, 0};
}

}  // namespace

TEST_CASE("local P1 fan matches the reference data") {
  FanData fan = build_fan(kp1_input());
  CHECK(fan.n == 2);
  CHECK(fan.m == 3);
  CHECK(fan.rays == std::vector<IntVec>{{1, 1}, {0, 1}, {-1, 1}});
  CHECK(fan.perm == std::vector<int>{2, 1, 0});
  CHECK(fan.coords[2] == IntVec{-1, 2});
  CHECK(fan.curve_basis == std::vector<IntVec>{{1, -2, 1}});
  CHECK(fan.pairing == std::vector<IntVec>{{1}, {-2}, {1}});
}

TEST_CASE("local P2 fan matches the reference data") {
  FanData fan = build_fan(kp2_input());
  CHECK(fan.n == 3);
  CHECK(fan.m == 4);
  CHECK(fan.rays ==
        std::vector<IntVec>{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}, {-1, -1, 1}});
  CHECK(fan.coords[3] == IntVec{-1, -1, 3});
  CHECK(fan.curve_basis == std::vector<IntVec>{{1, 1, -3, 1}});
  CHECK(fan.pairing == std::vector<IntVec>{{1}, {1}, {-3}, {1}});
}

TEST_CASE("unit simplex has no curve classes") {
  FanData fan = load("simplex.txt").fan;
  CHECK(fan.m == fan.n);
  CHECK(fan.curve_basis.empty());
  CHECK(wall_curve_classes(fan).empty());
  CHECK(default_grading(fan).weights.empty());
}

TEST_CASE("intersection numbers reduce to beta coordinates") {
  FanData kp1 = build_fan(kp1_input());
  CurveClass c3{{1}};
  CHECK(kp1.intersect(1, c3) == -2);  // D_2 . C_3
  CHECK(kp1.intersect(0, c3) == 1);
  CurveClass zero{{0}};
  for (int p = 0; p < kp1.m; ++p) CHECK(kp1.intersect(p, zero) == 0);

  FanData kp2 = build_fan(kp2_input());
  CurveClass c4{{1}};
  CHECK(kp2.intersect(2, c4) == -3);  // D_3 . C_4
}

TEST_CASE("wall classes and default gradings") {
  CHECK(wall_curve_classes(build_fan(kp1_input())) == std::vector<CurveClass>{{{1}}});
  CHECK(wall_curve_classes(build_fan(kp2_input())) ==
        std::vector<CurveClass>{{{1}}, {{1}}, {{1}}});
  CHECK(default_grading(build_fan(kp1_input())).weights == std::vector<std::int64_t>{1});
  CHECK(default_grading(build_fan(kp2_input())).weights == std::vector<std::int64_t>{1});

  auto square = load("square.txt");
  CHECK(wall_curve_classes(square.fan) == std::vector<CurveClass>{{{1}}});
  CHECK(square.grading.weights == std::vector<std::int64_t>{1});

  // mixed-sign wall class forces a non-uniform grading
  auto a2 = load("interval3.txt");
  CHECK(wall_curve_classes(a2.fan) ==
        std::vector<CurveClass>{{{1, 0}}, {{-2, 1}}});
  CHECK(a2.grading.weights == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("validation rejects malformed input") {
  PolytopeInput nonuni{1, {{0}, {2}}, {{0, 1}}, 0};
  CHECK_THROWS_WITH_AS(build_fan(nonuni), doctest::Contains("NonUnimodularCell"), error);

  PolytopeInput unused{1, {{-1}, {0}, {1}, {5}}, {{0, 1}, {1, 2}}, 0};
  CHECK_THROWS_WITH_AS(build_fan(unused), doctest::Contains("InconsistentTriangulation"),
                       error);

  PolytopeInput dup{1, {{0}, {0}, {1}}, {{0, 2}, {1, 2}}, 0};
  CHECK_THROWS_WITH_AS(build_fan(dup), doctest::Contains("InconsistentTriangulation"), error);

  PolytopeInput out_of_range{1, {{0}, {1}}, {{0, 1}}, 3};
  CHECK_THROWS_WITH_AS(build_fan(out_of_range), doctest::Contains("ValidationError"), error);

  PolytopeInput bad_index{1, {{0}, {1}}, {{0, 7}}, 0};
  CHECK_THROWS_WITH_AS(build_fan(bad_index), doctest::Contains("InconsistentTriangulation"),
                       error);
}

TEST_CASE("grading validation") {
  FanData fan = load("interval3.txt").fan;
  CHECK_THROWS_AS(validate_grading(fan, Grading{{1, 1}}), error);   // wall degree 0
  CHECK_THROWS_AS(validate_grading(fan, Grading{{0, 3}}), error);   // weight < 1
  CHECK_THROWS_AS(validate_grading(fan, Grading{{1}}), error);      // arity
  CHECK_NOTHROW(validate_grading(fan, Grading{{1, 3}}));
  CHECK_NOTHROW(validate_grading(fan, Grading{{2, 5}}));
}

TEST_CASE("curve classes project to zero in N") {
  for (const char* name : {"kp1.txt", "kp2.txt", "square.txt", "interval3.txt"}) {
    FanData fan = load(name).fan;
    std::vector<CurveClass> classes = wall_curve_classes(fan);
    CurveClass mixed{IntVec(fan.num_classes(), 0)};
    for (std::size_t t = 0; t < fan.num_classes(); ++t)
      mixed.coeffs[t] = static_cast<std::int64_t>(t) + 2;
    classes.push_back(mixed);
    for (const auto& d : classes) {
      IntVec beta = fan.beta_coords(d);
      IntVec proj(fan.n, 0);
      for (int k = 0; k < fan.m; ++k)
        for (int r = 0; r < fan.n; ++r) proj[r] += beta[k] * fan.rays[k][r];
      CHECK(is_zero(proj));
    }
  }
}

TEST_CASE("pairing duality and height-one coordinates") {
  for (const char* name : {"kp1.txt", "kp2.txt", "square.txt", "interval3.txt"}) {
    FanData fan = load(name).fan;
    for (std::size_t t = 0; t < fan.num_classes(); ++t) {
      CurveClass ci{IntVec(fan.num_classes(), 0)};
      ci.coeffs[t] = 1;
      for (int p = fan.n; p < fan.m; ++p)
        CHECK(fan.intersect(p, ci) == (p - fan.n == static_cast<int>(t) ? 1 : 0));
    }
    for (int i = 0; i < fan.m; ++i) {
      std::int64_t h = 0;
      for (int l = 0; l < fan.n; ++l) h += fan.coords[i][l];
      CHECK(h == 1);
    }
  }
}

TEST_CASE("relabelling input points yields the same geometric pairing") {
  PolytopeInput base = kp2_input();
  FanData reference = build_fan(base);

  auto pairing_by_geometry = [](const FanData& fan) {
    // (ray vector of p, ray vector of the class generator) -> pairing value
    std::map<std::pair<IntVec, IntVec>, std::int64_t> out;
    for (int p = 0; p < fan.m; ++p)
      for (std::size_t t = 0; t < fan.num_classes(); ++t)
        out[{fan.rays[p], fan.rays[fan.n + t]}] = fan.pairing[p][t];
    return out;
  };

  std::mt19937 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<int> relabel(base.points.size());
    for (std::size_t i = 0; i < relabel.size(); ++i) relabel[i] = static_cast<int>(i);
    std::shuffle(relabel.begin(), relabel.end(), rng);

    PolytopeInput shuffled;
    shuffled.dim = base.dim;
    shuffled.points.resize(base.points.size());
    for (std::size_t i = 0; i < base.points.size(); ++i)
      shuffled.points[relabel[i]] = base.points[i];
    for (const auto& cell : base.cells) {
      std::vector<int> c;
      for (int idx : cell) c.push_back(relabel[idx]);
      shuffled.cells.push_back(c);
    }
    shuffled.base_cell = base.base_cell;

    FanData permuted = build_fan(shuffled);
    CHECK(pairing_by_geometry(permuted) == pairing_by_geometry(reference));
  }
}
