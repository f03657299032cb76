#pragma once

#include <vector>

#include <slabcy/grading.hpp>
#include <slabcy/lattice.hpp>
#include <slabcy/polytope.hpp>

namespace slabcy {

// A curve class in the basis {C_{n+1},...,C_m}; coeffs has length m-n.
struct CurveClass {
  IntVec coeffs;

  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

// All lattice-combinatorial data of the toric Calabi-Yau manifold.  Rays are
// the polytope points lifted to height 1 and reordered so the base cell
// occupies indices 0..n-1 (1..n in the 1-based convention of all rendered
// output).  Everything downstream indexes rays in this internal order.
struct FanData {
  int n = 0;  // rank of N
  int m = 0;  // number of rays
  std::vector<IntVec> rays;    // m x n, last coordinate 1
  std::vector<int> perm;       // ray i came from input point perm[i]
  std::vector<IntVec> coords;  // m x n, v_i = sum_l coords[i][l] v_l
  // beta-coordinates of C_{n+t}: entry n+t is 1, entry l < n is -coords[n+t][l]
  std::vector<IntVec> curve_basis;  // (m-n) x m
  std::vector<IntVec> pairing;      // m x (m-n): pairing[p][t] = D_p . C_{n+t}
  // triangulation cells in internal ray indices, each sorted
  std::vector<std::vector<int>> cells;

  std::size_t num_classes() const { return static_cast<std::size_t>(m - n); }

  // beta-coordinates of an arbitrary class sum_t d.coeffs[t] C_{n+t}
  IntVec beta_coords(const CurveClass& d) const;
  // D_p . d for a ray index p in 0..m-1
  std::int64_t intersect(int p, const CurveClass& d) const;
};

// Cone over the triangulation.  Validates the input, lifts and reorders the
// rays, solves the base-change coordinates exactly, and fills the curve-class
// basis and pairing table.
//
// The base-cell vertex order is canonical: ascending input point index, with
// the last two swapped when the lifted determinant is -1.  This pins down a
// reproducible orientation (determinant +1) for any input labelling.
FanData build_fan(const PolytopeInput& input);

// One class per interior wall of the triangulation: the unique primitive
// relation among the n+1 vertices of the two cells sharing a codimension-1
// face, signed so the two opposite vertices carry positive coefficients.
std::vector<CurveClass> wall_curve_classes(const FanData& fan);

// Smallest positive integer weights (all-ones first, then increasing vectors
// with coordinates up to 16, ordered by sum then lexicographically) giving
// every wall class degree >= 1.  Throws no_grading_found when exhausted.
Grading default_grading(const FanData& fan);

// Checks a user-supplied grading: strictly positive weights, deg >= 1 on all
// wall classes.  Throws validation_error.
void validate_grading(const FanData& fan, const Grading& grading);

}  // namespace slabcy
