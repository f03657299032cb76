#include <slabcy/mirror.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>

#include <slabcy/errors.hpp>

namespace slabcy {

namespace {

void check_ray(const FanData& fan, int j) {
  if (j < 0 || j >= fan.m) fail(errc::index_out_of_range, "ray index out of range");
}

// Minimal nonzero solutions of sum_i a_i * cols[i] = 0 over the naturals
// (Contejean-Devie completion).  Every solution is an N-combination of these.
std::vector<std::vector<std::int64_t>> minimal_solutions(const std::vector<IntVec>& cols) {
  const std::size_t k = cols.size();
  const std::size_t dim = cols.empty() ? 0 : cols[0].size();

  auto value = [&](const std::vector<std::int64_t>& x) {
    IntVec v(dim, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (x[i] != 0)
        for (std::size_t r = 0; r < dim; ++r) v[r] += x[i] * cols[i][r];
    return v;
  };
  auto dominated = [](const std::vector<std::int64_t>& x,
                      const std::vector<std::vector<std::int64_t>>& basis) {
    for (const auto& b : basis) {
      bool le = true;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (b[i] > x[i]) {
          le = false;
          break;
        }
      if (le) return true;
    }
    return false;
  };

  std::vector<std::vector<std::int64_t>> basis;
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> frontier;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> e(k, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(std::move(e));
  }

  while (!frontier.empty()) {
    auto x = std::move(frontier.front());
    frontier.pop_front();
    if (dominated(x, basis)) continue;
    IntVec v = value(x);
    if (is_zero(v)) {
      basis.push_back(std::move(x));
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t dot = 0;
      for (std::size_t r = 0; r < dim; ++r) dot += v[r] * cols[i][r];
      if (dot >= 0) continue;
      auto y = x;
      ++y[i];
      if (dominated(y, basis)) continue;
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }

  std::sort(basis.begin(), basis.end());
  return basis;
}

CurveClass class_of_tuple(const FanData& fan, int j, const std::vector<std::int64_t>& a) {
  // d = sum_{i != j} a_i (C_i - C_j);  C_i = 0 for base rays
  CurveClass d;
  d.coeffs.assign(fan.num_classes(), 0);
  std::int64_t p = 0;
  for (int i = 0; i < fan.m; ++i) {
    if (i == j) continue;
    p += a[i];
    if (i >= fan.n) d.coeffs[i - fan.n] += a[i];
  }
  if (j >= fan.n) d.coeffs[j - fan.n] -= p;
  return d;
}

}  // namespace

std::vector<BalancedTuple> enumerate_balanced(const FanData& fan, int j, std::int64_t order,
                                              const Grading& grading) {
  check_ray(fan, j);
  if (grading.weights.size() != fan.num_classes())
    fail(errc::grading_mismatch, "grading arity does not match the fan");

  std::vector<int> vars;
  std::vector<IntVec> cols;
  for (int i = 0; i < fan.m; ++i) {
    if (i == j) continue;
    vars.push_back(i);
    cols.push_back(sub(fan.rays[i], fan.rays[j]));
  }

  auto minimal = minimal_solutions(cols);

  std::vector<std::vector<std::int64_t>> min_full;
  std::vector<std::int64_t> min_deg;
  for (const auto& h : minimal) {
    std::vector<std::int64_t> full(fan.m, 0);
    for (std::size_t idx = 0; idx < vars.size(); ++idx) full[vars[idx]] = h[idx];
    std::int64_t dh = grading.degree(class_of_tuple(fan, j, full).coeffs);
    if (dh < 1)
      fail(errc::no_grading_found,
           "grading is not strictly positive on a balanced class at ray " +
               std::to_string(j + 1));
    min_full.push_back(std::move(full));
    min_deg.push_back(dh);
  }

  // every balanced tuple is an N-combination of the minimal ones, and degree
  // is additive, so combinations with total degree <= order are exhaustive
  std::set<std::vector<std::int64_t>> tuples;
  std::vector<std::int64_t> acc(fan.m, 0);
  std::function<void(std::size_t, std::int64_t)> extend = [&](std::size_t s,
                                                              std::int64_t budget) {
    if (s == min_full.size()) {
      if (std::any_of(acc.begin(), acc.end(), [](std::int64_t x) { return x != 0; }))
        tuples.insert(acc);
      return;
    }
    extend(s + 1, budget);
    std::int64_t used = 0;
    while (used + min_deg[s] <= budget) {
      used += min_deg[s];
      for (int i = 0; i < fan.m; ++i) acc[i] += min_full[s][i];
      extend(s + 1, budget - used);
    }
    for (std::int64_t back = min_deg[s]; back <= used; back += min_deg[s])
      for (int i = 0; i < fan.m; ++i) acc[i] -= min_full[s][i];
  };
  extend(0, order);

  std::vector<BalancedTuple> out;
  for (const auto& a : tuples) {
    BalancedTuple t;
    t.j = j;
    t.a = a;
    t.d = class_of_tuple(fan, j, a);
    t.p = 0;
    for (int i = 0; i < fan.m; ++i) t.p += a[i];
    if (grading.degree(t.d.coeffs) > order) continue;
    // defining pairings, asserted per tuple
    for (int i = 0; i < fan.m; ++i) {
      std::int64_t expect = (i == j) ? -t.p : a[i];
      if (fan.intersect(i, t.d) != expect)
        fail(errc::internal_laurent_leak,
             "balanced tuple fails its defining pairing at ray " + std::to_string(i + 1));
    }
    out.push_back(std::move(t));
  }

  std::sort(out.begin(), out.end(), [](const BalancedTuple& x, const BalancedTuple& y) {
    if (x.p != y.p) return x.p < y.p;
    return x.a < y.a;
  });
  return out;
}

QSeries g_series(const FanData& fan, int j, std::int64_t order, const Grading& grading) {
  check_ray(fan, j);
  QSeries g(grading, order);
  std::set<Exponent> classes;
  for (const auto& t : enumerate_balanced(fan, j, order, grading)) {
    if (!classes.insert(t.d.coeffs).second)
      fail(errc::internal_laurent_leak, "two balanced tuples map to one curve class");
    Int num = factorial(t.p - 1);
    if (t.p % 2 == 1) num = -num;
    Int den = 1;
    for (int i = 0; i < fan.m; ++i)
      if (i != j && t.a[i] > 1) den *= factorial(t.a[i]);
    g.add_term(t.d.coeffs, Rational(num, den));
  }
  return g;
}

namespace {

Exponent unit_exp(std::size_t nv, std::size_t t) {
  Exponent e(nv, 0);
  e[t] = 1;
  return e;
}

}  // namespace

MirrorData mirror_data(const FanData& fan, std::int64_t order, const Grading& grading) {
  if (order < 0) fail(errc::validation_error, "order must be nonnegative");
  const std::size_t nv = fan.num_classes();
  MirrorData mi;
  mi.order = order;
  for (int k = 0; k < fan.m; ++k) mi.g.push_back(g_series(fan, k, order, grading));

  for (std::size_t t = 0; t < nv; ++t) {
    QSeries e(grading, order);
    for (int k = 0; k < fan.m; ++k)
      if (fan.pairing[k][t] != 0) e += Rational(fan.pairing[k][t]) * mi.g[k];
    mi.forward.push_back(shift(exp(-e), unit_exp(nv, t)));
  }

  for (std::size_t t = 0; t < nv; ++t)
    mi.inverse.push_back(
        shift(QSeries::one(grading, order), unit_exp(nv, t)));

  const int max_rounds = static_cast<int>(order) + 8;
  bool stable = false;
  for (int round = 0; round < max_rounds && !stable; ++round) {
    std::vector<QSeries> next;
    for (std::size_t t = 0; t < nv; ++t) {
      QSeries s(grading, order);
      for (int k = 0; k < fan.m; ++k)
        if (fan.pairing[k][t] != 0)
          s += Rational(fan.pairing[k][t]) * substitute(mi.g[k], mi.inverse, order);
      next.push_back(shift(exp(s), unit_exp(nv, t)));
    }
    stable = next == mi.inverse;
    mi.inverse = std::move(next);
  }
  if (!stable) fail(errc::round_trip_failure, "inverse mirror map did not stabilize");

  // round trip, exact through `order`
  for (std::size_t t = 0; t < nv; ++t) {
    QSeries var = shift(QSeries::one(grading, order), unit_exp(nv, t)).truncated(order);
    if (substitute(mi.forward[t], mi.inverse, order) != var ||
        substitute(mi.inverse[t], mi.forward, order) != var)
      fail(errc::round_trip_failure, "mirror map round trip failed at variable " +
                                         std::to_string(fan.n + t + 1));
  }
  return mi;
}

MirrorMap mirror_map(const FanData& fan, std::int64_t order, const Grading& grading) {
  MirrorData mi = mirror_data(fan, order, grading);
  MirrorMap map;
  map.order = order;
  for (auto& s : mi.forward) map.forward.push_back(s.truncated(order));
  for (auto& s : mi.inverse) map.inverse.push_back(s.truncated(order));
  return map;
}

QSeries ogw_series(const FanData& fan, int i, std::int64_t order, const Grading& grading) {
  check_ray(fan, i);
  MirrorData mi = mirror_data(fan, order, grading);
  return exp(substitute(mi.g[i], mi.inverse, order));
}

std::vector<QSeries> ogw_all_series(const FanData& fan, std::int64_t order,
                                    const Grading& grading) {
  MirrorData mi = mirror_data(fan, order, grading);
  std::vector<QSeries> out;
  for (int i = 0; i < fan.m; ++i) out.push_back(exp(substitute(mi.g[i], mi.inverse, order)));
  return out;
}

Rational ogw_invariant(const FanData& fan, int i, const CurveClass& alpha, std::int64_t order,
                       const Grading& grading) {
  return ogw_series(fan, i, order, grading).coefficient(alpha.coeffs);
}

}  // namespace slabcy
