#include <slabcy/series.hpp>

#include <algorithm>
#include <sstream>

namespace slabcy {

namespace {

void require_same_ring(const QSeries& a, const QSeries& b) {
  if (a.grading() != b.grading())
    fail(errc::grading_mismatch, "operands use different gradings");
  if (a.order() != b.order())
    fail(errc::grading_mismatch, "operands use different truncation orders");
}

std::string exp_str(const Exponent& e) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    os << e[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

QSeries QSeries::constant(const Rational& c, const Grading& g, std::int64_t order) {
  QSeries s(g, order);
  s.add_term(Exponent(g.num_vars(), 0), c);
  return s;
}

QSeries QSeries::one(const Grading& g, std::int64_t order) {
  return constant(Rational(1), g, order);
}

QSeries QSeries::monomial(const Exponent& e, const Rational& c, const Grading& g,
                          std::int64_t order) {
  QSeries s(g, order);
  s.add_term(e, c);
  return s;
}

QSeries QSeries::variable(std::size_t var, const Grading& g, std::int64_t order) {
  Exponent e(g.num_vars(), 0);
  e.at(var) = 1;
  return monomial(e, Rational(1), g, order);
}

bool QSeries::is_laurent() const {
  for (const auto& [mono, c] : terms_)
    for (auto x : mono.exp)
      if (x < 0) return true;
  return false;
}

Rational QSeries::constant_term() const {
  Exponent zero(num_vars(), 0);
  auto it = terms_.find(Monomial{0, zero});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool QSeries::degree_zero_is_constant() const {
  Exponent zero(num_vars(), 0);
  for (const auto& [mono, c] : terms_) {
    if (mono.deg > 0) break;
    if (mono.exp != zero) return false;
  }
  return true;
}

std::int64_t QSeries::min_nonzero_degree() const {
  Exponent zero(num_vars(), 0);
  for (const auto& [mono, c] : terms_) {
    if (mono.exp != zero) return mono.deg;
  }
  return order_ + 1;
}

Rational QSeries::coefficient(const Exponent& e) const {
  if (e.size() != num_vars()) fail(errc::validation_error, "exponent arity mismatch");
  std::int64_t d = grading_.degree(e);
  if (d > order_)
    fail(errc::exponent_beyond_order,
         "coefficient at " + exp_str(e) + " has degree " + std::to_string(d) +
             " beyond truncation order " + std::to_string(order_));
  auto it = terms_.find(Monomial{d, e});
  return it == terms_.end() ? Rational(0) : it->second;
}

void QSeries::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars()) fail(errc::validation_error, "exponent arity mismatch");
  if (c == 0) return;
  std::int64_t d = grading_.degree(e);
  if (d > order_) return;
  if (d < 0)
    fail(errc::internal_laurent_leak,
         "term " + exp_str(e) + " has negative degree " + std::to_string(d));
  auto [it, inserted] = terms_.try_emplace(Monomial{d, e}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QSeries QSeries::truncated(std::int64_t new_order) const {
  QSeries out(grading_, new_order);
  for (const auto& [mono, c] : terms_) {
    if (mono.deg > new_order) break;
    out.terms_.emplace(mono, c);
  }
  return out;
}

QSeries QSeries::component(std::int64_t d) const {
  QSeries out(grading_, order_);
  for (auto it = terms_.lower_bound(Monomial{d, {}}); it != terms_.end() && it->first.deg == d;
       ++it)
    out.terms_.emplace(it->first, it->second);
  return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [mono, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [mono, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(mono, Rational(-c));
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

QSeries operator+(QSeries a, const QSeries& b) {
  a += b;
  return a;
}

QSeries operator-(QSeries a, const QSeries& b) {
  a -= b;
  return a;
}

QSeries operator-(const QSeries& a) {
  QSeries r = a;
  r *= Rational(-1);
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  require_same_ring(a, b);
  QSeries out(a.grading(), a.order());
  const std::size_t nv = a.num_vars();
  Exponent e(nv);
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.deg > a.order()) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.deg + mb.deg > a.order()) break;  // terms sorted by degree
      for (std::size_t i = 0; i < nv; ++i) e[i] = ma.exp[i] + mb.exp[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

QSeries operator*(const Rational& c, QSeries s) {
  s *= c;
  return s;
}

QSeries shift(const QSeries& s, const Exponent& e) {
  // exactness window translates with the shift, in both directions
  std::int64_t dshift = s.grading().degree(e);
  QSeries out(s.grading(), s.order() + dshift);
  Exponent sum(s.num_vars());
  for (const auto& [mono, c] : s.terms()) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = mono.exp[i] + e[i];
    out.add_term(sum, c);
  }
  return out;
}

QSeries invert(const QSeries& s) {
  Rational c0 = s.constant_term();
  if (c0 == 0 || !s.degree_zero_is_constant())
    fail(errc::bad_constant_term, "inverse requires a unit (nonzero constant) degree-0 part");
  // s = c0 (1 + v), v of positive degree: 1/s = (1/c0) sum (-v)^p
  QSeries v = Rational(Rational(1) / c0) * s;
  v.add_term(Exponent(s.num_vars(), 0), Rational(-1));
  QSeries out = QSeries::one(s.grading(), s.order());
  QSeries power = QSeries::one(s.grading(), s.order());
  for (std::int64_t p = 1; p <= s.order(); ++p) {
    power = power * v;
    if (power.is_zero()) break;
    if (p % 2 == 1)
      out -= power;
    else
      out += power;
  }
  out *= Rational(Rational(1) / c0);
  return out;
}

QSeries pow(const QSeries& s, std::int64_t e) {
  if (e == 0) return QSeries::one(s.grading(), s.order());
  const QSeries base = e < 0 ? invert(s) : s;
  std::int64_t k = e < 0 ? -e : e;
  QSeries acc = base;
  --k;
  while (k > 0) {
    acc = acc * base;
    --k;
  }
  return acc;
}

QSeries exp(const QSeries& s) {
  if (s.constant_term() != 0 || !s.degree_zero_is_constant())
    fail(errc::bad_constant_term, "exp requires vanishing degree-0 part");
  QSeries out = QSeries::one(s.grading(), s.order());
  QSeries term = QSeries::one(s.grading(), s.order());
  for (std::int64_t p = 1; p <= s.order(); ++p) {
    term = term * s;
    term *= Rational(1, p);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

QSeries log(const QSeries& u) {
  if (u.constant_term() != 1 || !u.degree_zero_is_constant())
    fail(errc::bad_constant_term, "log requires degree-0 part exactly 1");
  QSeries w = u;
  w.add_term(Exponent(u.num_vars(), 0), Rational(-1));
  QSeries out(u.grading(), u.order());
  QSeries power = QSeries::one(u.grading(), u.order());
  for (std::int64_t p = 1; p <= u.order(); ++p) {
    power = power * w;
    if (power.is_zero()) break;
    out += Rational(p % 2 == 1 ? 1 : -1, p) * power;
  }
  return out;
}

QSeries substitute(const QSeries& s, const std::vector<QSeries>& images,
                   std::int64_t out_order) {
  const std::size_t nv = s.num_vars();
  if (images.size() != nv)
    fail(errc::substitution_not_grading_compatible, "one image series required per variable");
  for (std::size_t l = 0; l < nv; ++l) {
    const QSeries& im = images[l];
    if (im.grading() != s.grading())
      fail(errc::grading_mismatch, "image grading differs from source grading");
    if (im.constant_term() != 0 || !im.degree_zero_is_constant())
      fail(errc::substitution_not_grading_compatible,
           "image of variable " + std::to_string(l) + " has a degree-0 term");
    if (!im.is_zero() && im.min_nonzero_degree() < s.grading().weights[l])
      fail(errc::substitution_not_grading_compatible,
           "image of variable " + std::to_string(l) + " has terms below the variable degree");
  }

  QSeries out(s.grading(), out_order);
  const auto& w = s.grading().weights;
  for (const auto& [mono, c] : s.terms()) {
    if (mono.deg > out_order) break;
    bool negative = std::any_of(mono.exp.begin(), mono.exp.end(),
                                [](std::int64_t x) { return x < 0; });
    // Exactness budget: contributions of this term to degrees <= out_order use
    // image data through out_order (ordinary terms, every factor contributes
    // at least its variable degree) resp. out_order - mono.deg + w[l] (mixed
    // sign terms, via unit cofactors).
    for (std::size_t l = 0; l < nv; ++l) {
      if (mono.exp[l] == 0) continue;
      std::int64_t required = negative ? out_order - mono.deg + w[l] : out_order;
      if (images[l].order() < required)
        fail(errc::substitution_not_grading_compatible,
             "image order " + std::to_string(images[l].order()) + " of variable " +
                 std::to_string(l) + " too small for exact truncation at " +
                 std::to_string(out_order));
    }

    if (!negative) {
      QSeries term = QSeries::constant(c, s.grading(), out_order);
      for (std::size_t l = 0; l < nv; ++l) {
        if (mono.exp[l] == 0) continue;
        term = term * pow(images[l].truncated(out_order), mono.exp[l]);
        if (term.is_zero()) break;
      }
      out += term;
      continue;
    }

    // Mixed-sign term: extract q^mono up front, leaving unit cofactors
    // u_l = images[l] / q_l, and shift the unit product back at the end.
    std::int64_t budget = out_order - mono.deg;
    QSeries term = QSeries::constant(c, s.grading(), budget);
    for (std::size_t l = 0; l < nv; ++l) {
      if (mono.exp[l] == 0) continue;
      Exponent down(nv, 0);
      down[l] = -1;
      QSeries unit = shift(images[l], down);
      if (unit.constant_term() == 0 || !unit.degree_zero_is_constant())
        fail(errc::substitution_not_grading_compatible,
             "image of variable " + std::to_string(l) +
                 " is not a unit multiple of its variable; negative powers undefined");
      term = term * pow(unit.truncated(budget), mono.exp[l]);
      if (term.is_zero()) break;
    }
    out += shift(term, mono.exp).truncated(out_order);
  }
  return out;
}

QSeries substitute(const QSeries& s, const std::vector<QSeries>& images) {
  return substitute(s, images, s.order());
}

bool ZMonomial::is_trivial() const {
  return std::all_of(exps.begin(), exps.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace slabcy
