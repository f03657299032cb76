#pragma once

#include <vector>

#include <slabcy/fan.hpp>
#include <slabcy/series.hpp>

namespace slabcy {

// A solution of the balancing condition sum_{i != j} a_i (v_i - v_j) = 0 with
// a_i >= 0, not all zero.  Its class d = sum_{i != j} a_i (C_i - C_j) is
// exactly a class with D_j.d < 0 and D_i.d >= 0 for i != j, and the tuple is
// recoverable from d via a_i = D_i.d.
struct BalancedTuple {
  int j = 0;                      // distinguished ray (0-based)
  std::vector<std::int64_t> a;    // length m, a[j] = 0
  CurveClass d;
  std::int64_t p = 0;             // sum of a_i = -D_j.d
};

// All balanced tuples with deg(d) <= order, sorted by (p, lexicographic a).
// Complete by construction: tuples are enumerated as N-combinations of the
// minimal solutions (Hilbert basis, Contejean-Devie completion) of the
// balancing equation, whose classes all have deg >= 1.
std::vector<BalancedTuple> enumerate_balanced(const FanData& fan, int j, std::int64_t order,
                                              const Grading& grading);

// Hypergeometric series g_j(q): sum over balanced tuples of
// (-1)^p (p-1)! / prod a_i!  times q^d.  Constant term 0.
QSeries g_series(const FanData& fan, int j, std::int64_t order, const Grading& grading);

// forward[t]: q_{n+t} as a series in qcheck; inverse[t]: qcheck_{n+t} as a
// series in q.  Round-trip identity holds exactly through the stated order.
struct MirrorMap {
  std::vector<QSeries> forward;
  std::vector<QSeries> inverse;
  std::int64_t order = 0;
};

MirrorMap mirror_map(const FanData& fan, std::int64_t order, const Grading& grading);

// The data behind mirror_map, with the map for variable t carried at order
// order + w_t.  That per-variable headroom is exactly what keeps substitution
// into mixed-sign (Laurent-supported) series truncation-exact at `order`.
// Round-trip verified on construction.
struct MirrorData {
  std::vector<QSeries> g;        // per ray, at `order`
  std::vector<QSeries> forward;  // per class variable t, at order + w_t
  std::vector<QSeries> inverse;  // per class variable t, at order + w_t
  std::int64_t order = 0;
};

MirrorData mirror_data(const FanData& fan, std::int64_t order, const Grading& grading);

// Generating series 1 + delta_i(q) of open Gromov-Witten invariants of the
// basic disc class beta_i: exp g_i composed with the inverse mirror map.
QSeries ogw_series(const FanData& fan, int i, std::int64_t order, const Grading& grading);

// All m generating series from one mirror-map computation.
std::vector<QSeries> ogw_all_series(const FanData& fan, std::int64_t order,
                                    const Grading& grading);

// Single invariant n_{beta_i + alpha}; alpha = 0 gives 1.
Rational ogw_invariant(const FanData& fan, int i, const CurveClass& alpha, std::int64_t order,
                       const Grading& grading);

}  // namespace slabcy
