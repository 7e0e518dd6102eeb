#include "ttk/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace ttk {

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

Matrix identity(int n) {
  Matrix m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly(1);
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix r(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

// Reduced Burau matrix of sigma_i (1-based) on n strands, size n-1.
Matrix reduced_burau_generator(int i, int n) {
  const int d = n - 1;
  Matrix m = identity(d);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const int c = i - 1;  // 0-based centre row
  m[c][c] = -t;
  if (c - 1 >= 0) m[c - 1][c] = t;
  if (c + 1 < d) m[c + 1][c] = LaurentPoly(1);
  return m;
}

// Fraction-free (Bareiss) determinant; every division is exact.
LaurentPoly determinant(Matrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return LaurentPoly();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_divide(prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

LaurentPoly burau_alexander(const BraidWord& word) {
  if (!word.closure_is_knot()) throw std::invalid_argument("burau_alexander: closure is not a knot");
  const int n = word.strand_count;
  if (n == 1) return LaurentPoly(1);
  Matrix acc = identity(n - 1);
  for (const auto& l : word.letters) {
    if (l.generator < 1 || l.generator >= n) throw std::invalid_argument("burau_alexander: generator out of range");
    if (!l.positive) throw std::invalid_argument("burau_alexander: only positive letters are supported");
    acc = multiply(acc, reduced_burau_generator(l.generator, n));
  }
  Matrix lhs = identity(n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) lhs[i][j] -= acc[i][j];
  LaurentPoly det = determinant(lhs);
  // (1 - t^n) / (1 - t) = 1 + t + ... + t^{n-1}
  LaurentPoly geometric;
  for (int e = 0; e < n; ++e) geometric.add_term(1, e);
  LaurentPoly delta;
  try {
    delta = det.exact_divide(geometric);
  } catch (const std::domain_error&) {
    throw std::logic_error("burau_alexander: internal consistency failure (inexact division)");
  }
  return delta.symmetrized();
}

}  // namespace ttk
