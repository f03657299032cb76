#pragma once

#include <vector>

#include <slabcy/lattice.hpp>

namespace slabcy {

// A lattice polytope of dimension dim = n-1, triangulated into unimodular
// simplices.  points live in Z^dim; cells index into points; base_cell names
// the maximal cell whose vertices become the base rays v_1..v_n.
struct PolytopeInput {
  int dim = 0;
  std::vector<IntVec> points;
  std::vector<std::vector<int>> cells;
  int base_cell = 0;
};

// Checks all PolytopeInput invariants: distinct points, indices in range,
// cells of size dim+1, unimodular cells, every listed point used by some cell.
// Throws non_unimodular_cell / inconsistent_triangulation / validation_error.
void validate_polytope(const PolytopeInput& input);

}  // namespace slabcy
