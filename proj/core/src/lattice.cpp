#include <slabcy/lattice.hpp>

#include <limits>

#include <slabcy/errors.hpp>

namespace slabcy {

Int det(const IntMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(errc::validation_error, "determinant of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  // Bareiss: division at each step is exact.
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntVec solve_in_basis(const IntMat& basis, const IntVec& target) {
  const std::size_t n = basis.size();
  // columns of M are the basis vectors
  IntMat mt(n, IntVec(n));
  for (std::size_t l = 0; l < n; ++l) {
    if (basis[l].size() != n) fail(errc::validation_error, "basis vector of wrong dimension");
    for (std::size_t r = 0; r < n; ++r) mt[r][l] = basis[l][r];
  }
  Int d = det(mt);
  if (d == 0) fail(errc::singular_base, "base vectors are linearly dependent");
  IntVec out(n);
  for (std::size_t l = 0; l < n; ++l) {
    IntMat rep = mt;
    for (std::size_t r = 0; r < n; ++r) rep[r][l] = target[r];
    Int num = det(rep);
    if (num % d != 0)
      fail(errc::relation_not_integral, "coordinates are not integral in the given basis");
    Int c = num / d;
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
      fail(errc::validation_error, "coordinate overflow");
    out[l] = static_cast<std::int64_t>(c);
  }
  return out;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scale(std::int64_t c, const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace slabcy
