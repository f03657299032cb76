#pragma once

// Randomized exact-equality suites shared by the unit tests and the
// acceptance gate: series ring axioms, exp/log inversion, the exponential
// homomorphism, and truncation coherence.  Deterministic seeds.

#include <cstdint>
#include <random>
#include <string>

#include <slabcy/series.hpp>

namespace slabcy::testing {

struct SuiteResult {
  bool ok = true;
  std::string detail;
};

class SeriesGen {
 public:
  explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

  Grading grading() {
    std::size_t nv = 1 + rng_() % 3;
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < nv; ++i) w.push_back(1 + static_cast<std::int64_t>(rng_() % 2));
    return Grading{w};
  }

  std::int64_t order() { return 2 + static_cast<std::int64_t>(rng_() % 4); }

  Rational coefficient() {
    std::int64_t num = static_cast<std::int64_t>(rng_() % 19) - 9;
    std::int64_t den = 1 + static_cast<std::int64_t>(rng_() % 9);
    return Rational(num, den);
  }

  // random series; min_degree 0 allows constants, 1 forces vanishing constant term
  QSeries series(const Grading& g, std::int64_t order, int min_degree) {
    QSeries s(g, order);
    std::size_t terms = 1 + rng_() % 5;
    for (std::size_t t = 0; t < terms; ++t) {
      Exponent e(g.num_vars(), 0);
      for (auto& x : e) x = static_cast<std::int64_t>(rng_() % (order + 1));
      std::int64_t d = g.degree(e);
      if (d > order || d < min_degree) continue;
      s.add_term(e, coefficient());
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

inline SuiteResult ring_axiom_suite(int cases, std::uint64_t seed) {
  SeriesGen gen(seed);
  for (int c = 0; c < cases; ++c) {
    Grading g = gen.grading();
    std::int64_t k = gen.order();
    QSeries a = gen.series(g, k, 0), b = gen.series(g, k, 0), x = gen.series(g, k, 0);
    if (!((a + b) + x == a + (b + x)))
      return {false, "associativity of + failed at case " + std::to_string(c)};
    if (!((a * b) * x == a * (b * x)))
      return {false, "associativity of * failed at case " + std::to_string(c)};
    if (!(a * (b + x) == a * b + a * x))
      return {false, "distributivity failed at case " + std::to_string(c)};
    if (!(a * b == b * a)) return {false, "commutativity failed at case " + std::to_string(c)};
  }
  return {};
}

inline SuiteResult exp_log_suite(int cases, std::uint64_t seed) {
  SeriesGen gen(seed);
  for (int c = 0; c < cases; ++c) {
    Grading g = gen.grading();
    std::int64_t k = gen.order();
    QSeries s = gen.series(g, k, 1);
    if (!(log(exp(s)) == s)) return {false, "log(exp(s)) != s at case " + std::to_string(c)};
    QSeries u = QSeries::one(g, k) + gen.series(g, k, 1);
    if (!(exp(log(u)) == u)) return {false, "exp(log(u)) != u at case " + std::to_string(c)};
  }
  return {};
}

inline SuiteResult exp_homomorphism_suite(int cases, std::uint64_t seed) {
  SeriesGen gen(seed);
  for (int c = 0; c < cases; ++c) {
    Grading g = gen.grading();
    std::int64_t k = gen.order();
    QSeries s = gen.series(g, k, 1), t = gen.series(g, k, 1);
    if (!(exp(s + t) == exp(s) * exp(t)))
      return {false, "exp(s+t) != exp(s)exp(t) at case " + std::to_string(c)};
  }
  return {};
}

inline SuiteResult truncation_coherence_suite(int cases, std::uint64_t seed) {
  SeriesGen gen(seed);
  for (int c = 0; c < cases; ++c) {
    Grading g = gen.grading();
    std::int64_t k = gen.order();
    std::int64_t kp = k > 1 ? 1 + (c % (k - 1)) : 1;  // 1 <= kp < k
    QSeries a = gen.series(g, k, 0), b = gen.series(g, k, 0);
    if (!((a * b).truncated(kp) == a.truncated(kp) * b.truncated(kp)))
      return {false, "mul truncation coherence failed at case " + std::to_string(c)};
    QSeries s = gen.series(g, k, 1);
    if (!(exp(s).truncated(kp) == exp(s.truncated(kp))))
      return {false, "exp truncation coherence failed at case " + std::to_string(c)};
    QSeries u = QSeries::one(g, k) + s;
    if (!(log(u).truncated(kp) == log(u.truncated(kp))))
      return {false, "log truncation coherence failed at case " + std::to_string(c)};
  }
  return {};
}

}  // namespace slabcy::testing
