#pragma once

#include <vector>

#include <slabcy/fan.hpp>
#include <slabcy/series.hpp>

namespace slabcy {

// One summand of f_j: coefficient series A_i (constant term 1), the Laurent
// q-shift C_i - C_j kept symbolically in curve-class coordinates, and the
// z-monomial of v_i - v_j.
struct SlabBlock {
  QSeries a;
  Exponent q_shift;   // length m-n, may be negative componentwise
  ZMonomial z_exp;    // length n-1
};

// f_j = sum_i A_i q^{C_i-C_j} z^{v_i-v_j}.  Block j has zero shift and
// trivial z-monomial; its A_j carries the constant term 1.  The A vector is
// shared across all j from one solve, which encodes independence of the slab.
struct SlabFunction {
  int j = 0;  // 0-based distinguished ray
  std::int64_t order = 0;
  std::vector<SlabBlock> blocks;  // length m, indexed by ray
};

// Structural assembly; requires each A_i to have constant term 1 and order
// >= the requested order.
SlabFunction assemble(const FanData& fan, int j, const std::vector<QSeries>& a,
                      std::int64_t order);

// The z-free part of log f_j:
//   log A_j + sum over balanced tuples of
//     (-1)^{p-1} (p-1)!/prod a_i!  *  prod_{i != j} A_i^{a_i} * A_j^{-p} * q^{d}.
// Every retained q-exponent is an effective class of degree >= 1, so the sum
// terminates and the result is an ordinary series.
QSeries z_free_log(const FanData& fan, const SlabFunction& f, const Grading& grading);

// The unique A_1..A_m with constant term 1 such that the z-free part of
// log f_j vanishes for every j simultaneously, solved order-by-order: the
// degree-D part of log A_j is determined by A-coefficients of degree < D.
std::vector<QSeries> solve_normalized(const FanData& fan, std::int64_t order,
                                      const Grading& grading);

// Checks f_i = q^{C_j - C_i} z^{v_j - v_i} f_j block by block, exactly.
bool slab_relation_check(const FanData& fan, const SlabFunction& fi, const SlabFunction& fj);

}  // namespace slabcy
