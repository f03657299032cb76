#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <slabcy/errors.hpp>
#include <slabcy/grading.hpp>
#include <slabcy/rational.hpp>

namespace slabcy {

// Map key for series terms.  deg is cached and always equals
// grading.degree(exp); map iteration order is the canonical term order
// (degree, then lexicographic exponent).
struct Monomial {
  std::int64_t deg;
  Exponent exp;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Truncated multivariate formal power series over exact rationals, in the
// curve-class variables q_{n+1},...,q_m.  Invariants:
//   - every stored term has 0 <= deg <= order; zero coefficients never stored;
//   - coefficients are exact rationals in lowest terms (cpp_rational canonical);
//   - exponent components may be negative only in the Laurent-flagged regime
//     (mixed-sign effective classes); degree bounds, not componentwise signs,
//     drive truncation and termination.
class QSeries {
 public:
  QSeries(Grading grading, std::int64_t order) : grading_(std::move(grading)), order_(order) {}

  static QSeries zero(const Grading& g, std::int64_t order) { return QSeries(g, order); }
  static QSeries constant(const Rational& c, const Grading& g, std::int64_t order);
  static QSeries one(const Grading& g, std::int64_t order);
  // c * q^e
  static QSeries monomial(const Exponent& e, const Rational& c, const Grading& g,
                          std::int64_t order);
  // the bare variable q_{n+1+var}
  static QSeries variable(std::size_t var, const Grading& g, std::int64_t order);

  const Grading& grading() const { return grading_; }
  std::int64_t order() const { return order_; }
  std::size_t num_vars() const { return grading_.num_vars(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_laurent() const;   // any stored exponent has a negative component
  Rational constant_term() const;
  // true iff the degree-0 part is exactly the constant (no nonzero exponent of degree 0)
  bool degree_zero_is_constant() const;
  std::int64_t min_nonzero_degree() const;  // order+1 when zero

  // Stored coefficient or 0; throws exponent_beyond_order when deg(e) > order
  // (the caller must recompute at a higher order instead of reading 0).
  Rational coefficient(const Exponent& e) const;

  // Adds c * q^e, dropping the term if deg(e) > order and erasing cancellations.
  // Throws internal_laurent_leak when deg(e) < 0.
  void add_term(const Exponent& e, const Rational& c);

  QSeries truncated(std::int64_t new_order) const;
  // degree-d homogeneous part
  QSeries component(std::int64_t d) const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const Rational& c);

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.grading_ == b.grading_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  Grading grading_;
  std::int64_t order_;
  std::map<Monomial, Rational> terms_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, QSeries s);

// Multiply by the monomial q^shift.  The degree of shift may be positive
// (safe: re-truncates) or negative (the returned order shrinks by |deg shift|,
// since coefficients beyond it are no longer exact).  Terms that would land at
// negative degree throw internal_laurent_leak.
QSeries shift(const QSeries& s, const Exponent& e);

// Integer powers; negative exponents invert the unit part first.
QSeries pow(const QSeries& s, std::int64_t e);

// Multiplicative inverse; requires the degree-0 part to be a nonzero constant.
QSeries invert(const QSeries& s);

// exp(s) = sum s^p / p!; requires s to have no degree-0 terms.
QSeries exp(const QSeries& s);

// log(u) = sum (-1)^{p-1} (u-1)^p / p; requires the degree-0 part of u to be exactly 1.
QSeries log(const QSeries& u);

// Formal composition: substitute images[l] for variable l, computed exactly
// through out_order.  Requires every image to have no degree-0 term, every
// image term to have deg >= weight of its variable, and enough image order for
// the truncation to be exact (throws substitution_not_grading_compatible
// otherwise).  Negative source exponents require the image to be divisible by
// its own variable (mirror maps are; the unit cofactor gets inverted).
QSeries substitute(const QSeries& s, const std::vector<QSeries>& images,
                   std::int64_t out_order);
QSeries substitute(const QSeries& s, const std::vector<QSeries>& images);

// Exponent of a z-monomial in the basis e_k = v_k - v_n of the nu-perp
// sublattice; component k of v_i - v_j is coords[i][k] - coords[j][k].
struct ZMonomial {
  std::vector<std::int64_t> exps;

  bool is_trivial() const;
  friend auto operator<=>(const ZMonomial&, const ZMonomial&) = default;
};

}  // namespace slabcy
