#include <slabcy/fan.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include <slabcy/errors.hpp>

namespace slabcy {

namespace {

IntVec lift(const IntVec& point) {
  IntVec v = point;
  v.push_back(1);
  return v;
}

std::string vec_str(const IntVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

IntVec FanData::beta_coords(const CurveClass& d) const {
  if (d.coeffs.size() != num_classes())
    fail(errc::validation_error, "curve class arity mismatch");
  IntVec beta(m, 0);
  for (std::size_t t = 0; t < num_classes(); ++t)
    if (d.coeffs[t] != 0)
      for (int k = 0; k < m; ++k) beta[k] += d.coeffs[t] * curve_basis[t][k];
  return beta;
}

std::int64_t FanData::intersect(int p, const CurveClass& d) const {
  if (p < 0 || p >= m) fail(errc::index_out_of_range, "ray index out of range");
  if (d.coeffs.size() != num_classes())
    fail(errc::validation_error, "curve class arity mismatch");
  std::int64_t r = 0;
  for (std::size_t t = 0; t < num_classes(); ++t) r += pairing[p][t] * d.coeffs[t];
  return r;
}

FanData build_fan(const PolytopeInput& input) {
  validate_polytope(input);

  FanData fan;
  fan.n = input.dim + 1;
  fan.m = static_cast<int>(input.points.size());

  // Base vertices sorted by input index; flip the last pair when the lifted
  // determinant is -1, so the base is always positively oriented and the
  // ordering is reproducible for any input labelling.
  std::vector<int> base = input.cells[input.base_cell];
  std::sort(base.begin(), base.end());
  IntMat base_rows;
  for (int idx : base) base_rows.push_back(lift(input.points[idx]));
  Int d = det(base_rows);
  if (d == 0) fail(errc::singular_base, "base cell vectors are not a Z-basis");
  if (d == -1) {
    std::swap(base[fan.n - 2], base[fan.n - 1]);
    std::swap(base_rows[fan.n - 2], base_rows[fan.n - 1]);
    d = -d;
  }
  if (d != 1) fail(errc::singular_base, "base cell determinant is " + d.str());

  std::set<int> in_base(base.begin(), base.end());
  fan.perm = base;
  for (int idx = 0; idx < fan.m; ++idx)
    if (!in_base.count(idx)) fan.perm.push_back(idx);

  std::vector<int> inv_perm(fan.m);
  for (int i = 0; i < fan.m; ++i) inv_perm[fan.perm[i]] = i;

  for (int i = 0; i < fan.m; ++i) fan.rays.push_back(lift(input.points[fan.perm[i]]));

  for (int i = 0; i < fan.m; ++i) {
    if (i < fan.n) {
      IntVec delta(fan.n, 0);
      delta[i] = 1;
      fan.coords.push_back(delta);
    } else {
      IntVec c = solve_in_basis(base_rows, fan.rays[i]);
      std::int64_t height = std::accumulate(c.begin(), c.end(), std::int64_t{0});
      if (height != 1)
        fail(errc::singular_base, "ray " + std::to_string(i + 1) + " is not at height 1");
      fan.coords.push_back(c);
    }
  }

  for (int i = fan.n; i < fan.m; ++i) {
    IntVec beta(fan.m, 0);
    beta[i] = 1;
    for (int l = 0; l < fan.n; ++l) beta[l] -= fan.coords[i][l];
    fan.curve_basis.push_back(beta);
  }

  fan.pairing.assign(fan.m, IntVec(fan.num_classes(), 0));
  for (std::size_t t = 0; t < fan.num_classes(); ++t)
    for (int p = 0; p < fan.m; ++p) fan.pairing[p][t] = fan.curve_basis[t][p];

  for (const auto& cell : input.cells) {
    std::vector<int> internal;
    for (int idx : cell) internal.push_back(inv_perm[idx]);
    std::sort(internal.begin(), internal.end());
    fan.cells.push_back(std::move(internal));
  }
  std::sort(fan.cells.begin(), fan.cells.end());

  return fan;
}

std::vector<CurveClass> wall_curve_classes(const FanData& fan) {
  // facet (sorted ray subset of size n-1) -> (cell, opposite ray) pairs
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, int>>> facets;
  for (std::size_t c = 0; c < fan.cells.size(); ++c) {
    const auto& cell = fan.cells[c];
    for (std::size_t omit = 0; omit < cell.size(); ++omit) {
      std::vector<int> facet;
      for (std::size_t k = 0; k < cell.size(); ++k)
        if (k != omit) facet.push_back(cell[k]);
      facets[facet].emplace_back(c, cell[omit]);
    }
  }

  std::vector<CurveClass> walls;
  for (const auto& [facet, owners] : facets) {
    if (owners.size() != 2) continue;  // boundary facet
    int p = owners[0].second;
    int pp = owners[1].second;
    // express v_pp in the Z-basis (v_p, facet rays); the unique relation is
    //   v_pp - c_0 v_p - sum_k c_k v_{facet_k} = 0
    IntMat basis;
    basis.push_back(fan.rays[p]);
    for (int fidx : facet) basis.push_back(fan.rays[fidx]);
    IntVec c = solve_in_basis(basis, fan.rays[pp]);
    if (c[0] >= 0)
      fail(errc::inconsistent_triangulation,
           "cells around facet " + vec_str(IntVec(facet.begin(), facet.end())) +
               " overlap instead of meeting along it");

    IntVec relation(fan.m, 0);
    relation[pp] = 1;
    relation[p] = -c[0];
    for (std::size_t k = 0; k < facet.size(); ++k) relation[facet[k]] -= c[k + 1];

    CurveClass wall;
    for (int i = fan.n; i < fan.m; ++i) wall.coeffs.push_back(relation[i]);
    if (fan.beta_coords(wall) != relation)
      fail(errc::relation_not_integral,
           "wall relation " + vec_str(relation) + " is not in the curve-class lattice");
    walls.push_back(std::move(wall));
  }
  return walls;
}

Grading default_grading(const FanData& fan) {
  const std::size_t nv = fan.num_classes();
  if (nv == 0) return Grading{{}};

  auto walls = wall_curve_classes(fan);
  auto admissible = [&](const std::vector<std::int64_t>& w) {
    Grading g{w};
    for (const auto& wall : walls)
      if (g.degree(wall.coeffs) < 1) return false;
    return true;
  };

  // all-ones first, then increasing vectors in [1,16]^nv ordered by (sum, lex)
  constexpr std::int64_t kMaxWeight = 16;
  for (std::int64_t total = static_cast<std::int64_t>(nv); total <= kMaxWeight * static_cast<std::int64_t>(nv);
       ++total) {
    std::vector<std::int64_t> w(nv, 1);
    // enumerate compositions of `total` into nv parts within [1,16], lex order
    std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t pos,
                                                             std::int64_t remaining) {
      if (pos + 1 == nv) {
        if (remaining < 1 || remaining > kMaxWeight) return false;
        w[pos] = remaining;
        return admissible(w);
      }
      for (std::int64_t v = 1; v <= std::min(kMaxWeight, remaining); ++v) {
        w[pos] = v;
        if (rec(pos + 1, remaining - v)) return true;
      }
      return false;
    };
    if (rec(0, total)) return Grading{w};
  }

  std::string witness;
  for (const auto& wall : walls) {
    Grading ones{std::vector<std::int64_t>(nv, 1)};
    if (ones.degree(wall.coeffs) < 1) {
      witness = vec_str(wall.coeffs);
      break;
    }
  }
  fail(errc::no_grading_found,
       "no positive grading up to weight 16 makes all wall classes positive"
       "; violating class under all-ones: " +
           witness);
}

void validate_grading(const FanData& fan, const Grading& grading) {
  if (grading.weights.size() != fan.num_classes())
    fail(errc::validation_error,
         "grading must have " + std::to_string(fan.num_classes()) + " weights");
  for (auto w : grading.weights)
    if (w < 1) fail(errc::validation_error, "grading weights must be strictly positive");
  for (const auto& wall : wall_curve_classes(fan))
    if (grading.degree(wall.coeffs) < 1)
      fail(errc::validation_error,
           "grading gives wall class " + vec_str(wall.coeffs) + " degree " +
               std::to_string(grading.degree(wall.coeffs)));
}

}  // namespace slabcy
