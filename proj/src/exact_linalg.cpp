#include "degburgers/exact_linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace dgb {

int rref(RatMat& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rational inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank(RatMat m) { return rref(m); }

RatMat row_space_basis(RatMat m) {
  int rk = rref(m);
  m.resize(static_cast<size_t>(rk));
  return m;
}

bool in_span(const RatMat& basis, const RatVec& v) {
  RatMat m = basis;
  int r0 = rref(m);
  m.push_back(v);
  return rref(m) == r0;
}

std::optional<RatVec> solve(RatMat a, RatVec b) {
  const size_t rows = a.size();
  if (rows == 0) return RatVec{};
  const size_t cols = a[0].size();
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  rref(a);
  RatVec x(cols, Rational(0));
  for (size_t i = 0; i < rows; ++i) {
    size_t lead = cols + 1;
    for (size_t j = 0; j <= cols; ++j)
      if (a[i][j] != 0) {
        lead = j;
        break;
      }
    if (lead == cols) return std::nullopt;  // 0 = nonzero
    if (lead > cols) continue;              // zero row
    x[lead] = a[i][cols];
  }
  return x;
}

RatMat null_space(RatMat a) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  rref(a);
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    size_t lead = cols;
    for (size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) {
        lead = j;
        break;
      }
    if (lead == cols) break;
    pivot_of_col[lead] = static_cast<int>(i);
    ++r;
  }
  RatMat basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (pivot_of_col[free_c] >= 0) continue;
    RatVec v(cols, Rational(0));
    v[free_c] = 1;
    for (size_t c = 0; c < cols; ++c) {
      int pr = pivot_of_col[c];
      if (pr >= 0) v[c] = -a[static_cast<size_t>(pr)][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(RatMat a) {
  const size_t n = a.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const size_t n = a.size(), m = b[0].size(), k = b.size();
  RatMat r(n, RatVec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

RatVec mat_vec(const RatMat& a, const RatVec& v) {
  RatVec r(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

RatMat identity(int n) {
  RatMat m(static_cast<size_t>(n), RatVec(static_cast<size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

}  // namespace dgb
