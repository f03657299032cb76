#pragma once

#include <optional>
#include <string>

#include <slabcy/grading.hpp>
#include <slabcy/polytope.hpp>

namespace slabcy {

struct ParsedInput {
  PolytopeInput polytope;
  std::optional<std::vector<std::int64_t>> grading;  // optional override from the file
};

// Line-oriented key = value format, integers only, '#' comments:
//   dim = 2
//   points = [[1,0],[0,1],[0,0],[-1,-1]]
//   cells = [[0,1,2],[1,2,3],[0,2,3]]
//   base_cell = 0
//   grading = [1]          (optional)
// Throws parse_error with a line number; the polytope is validated afterwards.
ParsedInput parse_input_text(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

}  // namespace slabcy
