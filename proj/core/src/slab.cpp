#include <slabcy/slab.hpp>

#include <string>

#include <slabcy/errors.hpp>
#include <slabcy/mirror.hpp>

namespace slabcy {

namespace {

ZMonomial z_monomial(const FanData& fan, int i, int j) {
  ZMonomial z;
  for (int k = 0; k + 1 < fan.n; ++k) z.exps.push_back(fan.coords[i][k] - fan.coords[j][k]);
  return z;
}

Exponent q_shift_exponent(const FanData& fan, int i, int j) {
  Exponent e(fan.num_classes(), 0);
  if (i >= fan.n) e[i - fan.n] += 1;
  if (j >= fan.n) e[j - fan.n] -= 1;
  return e;
}

Rational multiset_log_coefficient(const BalancedTuple& t) {
  // (-1)^{p-1} (p-1)! / prod a_i!
  Int num = factorial(t.p - 1);
  if (t.p % 2 == 0) num = -num;
  Int den = 1;
  for (auto a : t.a)
    if (a > 1) den *= factorial(a);
  return Rational(num, den);
}

}  // namespace

SlabFunction assemble(const FanData& fan, int j, const std::vector<QSeries>& a,
                      std::int64_t order) {
  if (j < 0 || j >= fan.m) fail(errc::index_out_of_range, "ray index out of range");
  if (static_cast<int>(a.size()) != fan.m)
    fail(errc::validation_error, "one block series required per ray");
  SlabFunction f;
  f.j = j;
  f.order = order;
  for (int i = 0; i < fan.m; ++i) {
    if (a[i].constant_term() != 1 || !a[i].degree_zero_is_constant())
      fail(errc::bad_constant_term,
           "block series " + std::to_string(i + 1) + " must have constant term 1");
    if (a[i].order() < order)
      fail(errc::grading_mismatch,
           "block series " + std::to_string(i + 1) + " has order below " +
               std::to_string(order));
    f.blocks.push_back(SlabBlock{a[i].truncated(order), q_shift_exponent(fan, i, j),
                                 z_monomial(fan, i, j)});
  }
  return f;
}

QSeries z_free_log(const FanData& fan, const SlabFunction& f, const Grading& grading) {
  const int j = f.j;
  const std::int64_t order = f.order;
  QSeries result = log(f.blocks[j].a);
  if (fan.num_classes() == 0) return result;

  QSeries inv_aj = invert(f.blocks[j].a);
  for (const auto& t : enumerate_balanced(fan, j, order, grading)) {
    if (grading.degree(t.d.coeffs) < 1)
      fail(errc::internal_laurent_leak,
           "balanced multiset exponent is not effective of positive degree");
    QSeries prod = QSeries::constant(multiset_log_coefficient(t), grading, order);
    for (int i = 0; i < fan.m; ++i) {
      if (i == j || t.a[i] == 0) continue;
      prod = prod * pow(f.blocks[i].a, t.a[i]);
      if (prod.is_zero()) break;
    }
    prod = prod * pow(inv_aj, t.p);
    result += shift(prod, t.d.coeffs).truncated(order);
  }
  return result;
}

std::vector<QSeries> solve_normalized(const FanData& fan, std::int64_t order,
                                      const Grading& grading) {
  if (order < 0) fail(errc::validation_error, "order must be nonnegative");
  std::vector<QSeries> log_a(fan.m, QSeries(grading, order));
  std::vector<QSeries> a(fan.m, QSeries::one(grading, order));
  std::vector<QSeries> inv_a(fan.m, QSeries::one(grading, order));

  std::vector<std::vector<BalancedTuple>> tuples;
  for (int j = 0; j < fan.m; ++j) tuples.push_back(enumerate_balanced(fan, j, order, grading));

  for (std::int64_t deg = 1; deg <= order; ++deg) {
    // the degree-deg component of each j's multiset sum only reads
    // A-coefficients of degree < deg, so all j commit together
    std::vector<QSeries> corrections;
    for (int j = 0; j < fan.m; ++j) {
      QSeries sum(grading, order);
      for (const auto& t : tuples[j]) {
        if (grading.degree(t.d.coeffs) > deg) continue;
        QSeries prod = QSeries::constant(multiset_log_coefficient(t), grading, order);
        for (int i = 0; i < fan.m; ++i) {
          if (i == j || t.a[i] == 0) continue;
          prod = prod * pow(a[i], t.a[i]);
          if (prod.is_zero()) break;
        }
        prod = prod * pow(inv_a[j], t.p);
        sum += shift(prod, t.d.coeffs).truncated(order);
      }
      corrections.push_back(sum.component(deg));
    }
    for (int j = 0; j < fan.m; ++j) {
      if (corrections[j].is_zero()) continue;
      log_a[j] -= corrections[j];
      a[j] = exp(log_a[j]);
      inv_a[j] = invert(a[j]);
    }
  }
  return a;
}

bool slab_relation_check(const FanData& fan, const SlabFunction& fi, const SlabFunction& fj) {
  if (fi.order != fj.order) fail(errc::grading_mismatch, "slab functions at different orders");
  Exponent dq = q_shift_exponent(fan, fj.j, fi.j);
  ZMonomial dz = z_monomial(fan, fj.j, fi.j);
  for (int k = 0; k < fan.m; ++k) {
    const SlabBlock& bi = fi.blocks[k];
    const SlabBlock& bj = fj.blocks[k];
    if (!(bi.a == bj.a)) return false;
    for (std::size_t t = 0; t < dq.size(); ++t)
      if (bi.q_shift[t] != bj.q_shift[t] + dq[t]) return false;
    for (std::size_t t = 0; t < dz.exps.size(); ++t)
      if (bi.z_exp.exps[t] != bj.z_exp.exps[t] + dz.exps[t]) return false;
  }
  return true;
}

}  // namespace slabcy
