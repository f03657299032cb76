#pragma once

#include <cstdint>
#include <vector>

#include <slabcy/rational.hpp>

namespace slabcy {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row major

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMat& m);

// Solve sum_l c_l * basis[l] = target over the integers.  basis must be a
// Z-basis (|det| = 1); returns the unique integer coordinate vector.
// Throws errc::singular_base if det is 0, errc::relation_not_integral if the
// solution is not integral (impossible for |det| = 1).
IntVec solve_in_basis(const IntMat& basis, const IntVec& target);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(std::int64_t c, const IntVec& v);
bool is_zero(const IntVec& v);

}  // namespace slabcy
