#pragma once

#include <array>
#include <string>
#include <vector>

#include <slabcy/fan.hpp>
#include <slabcy/input.hpp>
#include <slabcy/series.hpp>

namespace slabcy::testing {

inline std::string data_path(const std::string& name) {
  return std::string(SLABCY_TEST_DATA_DIR) + "/" + name;
}

struct Geometry {
  FanData fan;
  Grading grading;
};

inline Geometry load(const std::string& name) {
  ParsedInput parsed = parse_input_file(data_path(name));
  Geometry g;
  g.fan = build_fan(parsed.polytope);
  g.grading = parsed.grading ? Grading{*parsed.grading} : default_grading(g.fan);
  return g;
}

// univariate series sum c_k q^k from (k, num, den) triples
inline QSeries uni(const std::vector<std::array<std::int64_t, 3>>& terms, std::int64_t order,
                   const Grading& g = Grading{{1}}) {
  QSeries s(g, order);
  for (const auto& [k, num, den] : terms) s.add_term({k}, Rational(num, den));
  return s;
}

inline Grading g1() { return Grading{{1}}; }

}  // namespace slabcy::testing
