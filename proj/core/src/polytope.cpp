#include <slabcy/polytope.hpp>

#include <set>
#include <string>

#include <slabcy/errors.hpp>

namespace slabcy {

void validate_polytope(const PolytopeInput& input) {
  if (input.dim < 1) fail(errc::validation_error, "dim must be at least 1");
  if (input.points.empty()) fail(errc::validation_error, "no lattice points given");
  for (std::size_t i = 0; i < input.points.size(); ++i)
    if (static_cast<int>(input.points[i].size()) != input.dim)
      fail(errc::validation_error,
           "point " + std::to_string(i) + " has wrong dimension");

  std::set<IntVec> distinct(input.points.begin(), input.points.end());
  if (distinct.size() != input.points.size())
    fail(errc::inconsistent_triangulation, "points are not pairwise distinct");

  if (input.cells.empty()) fail(errc::validation_error, "no cells given");
  const int cell_size = input.dim + 1;
  std::set<int> used;
  for (std::size_t c = 0; c < input.cells.size(); ++c) {
    const auto& cell = input.cells[c];
    if (static_cast<int>(cell.size()) != cell_size)
      fail(errc::inconsistent_triangulation,
           "cell " + std::to_string(c) + " must have " + std::to_string(cell_size) +
               " vertices");
    std::set<int> verts;
    for (int idx : cell) {
      if (idx < 0 || idx >= static_cast<int>(input.points.size()))
        fail(errc::inconsistent_triangulation,
             "cell " + std::to_string(c) + " references point " + std::to_string(idx) +
                 " out of range");
      verts.insert(idx);
      used.insert(idx);
    }
    if (static_cast<int>(verts.size()) != cell_size)
      fail(errc::inconsistent_triangulation,
           "cell " + std::to_string(c) + " repeats a vertex");

    // unimodularity: edge vectors from the first vertex span the full lattice
    IntMat edges;
    for (int k = 1; k < cell_size; ++k)
      edges.push_back(sub(input.points[cell[k]], input.points[cell[0]]));
    Int d = det(edges);
    if (d != 1 && d != -1)
      fail(errc::non_unimodular_cell,
           "cell " + std::to_string(c) + " has determinant " + d.str());
  }

  if (static_cast<int>(used.size()) != static_cast<int>(input.points.size()))
    fail(errc::inconsistent_triangulation,
         "some listed points are not vertices of any cell");

  if (input.base_cell < 0 || input.base_cell >= static_cast<int>(input.cells.size()))
    fail(errc::validation_error, "base_cell index out of range");
}

}  // namespace slabcy
