// Dense exact linear algebra over GF(3): rank/kernel, Jordan partitions of
// unipotent maps, projective point enumeration, symplectic and quadratic
// forms.  Matrices over GF(9) are handled by the callers via the 2x blow-up
// that fixes the F3-basis {1, i} of GF(9), in that order.

#pragma once

#include "gt/gf.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gt {

using VecF3 = std::vector<F3>;

inline VecF3 vec_add(const VecF3 &x, const VecF3 &y)
{
  VecF3 r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    r[k] = f3_add(x[k], y[k]);
  return r;
}

inline VecF3 vec_sub(const VecF3 &x, const VecF3 &y)
{
  VecF3 r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    r[k] = f3_sub(x[k], y[k]);
  return r;
}

inline VecF3 vec_scale(F3 c, const VecF3 &x)
{
  VecF3 r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    r[k] = f3_mul(c, x[k]);
  return r;
}

inline F3 vec_dot(const VecF3 &x, const VecF3 &y)
{
  int s = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    s += x[k] * y[k];
  return static_cast<F3>(s % 3);
}

inline bool vec_is_zero(const VecF3 &x)
{
  return std::all_of(x.begin(), x.end(), [](F3 c) { return c == 0; });
}

inline int vec_weight(const VecF3 &x)
{
  int w = 0;
  for (F3 c : x)
    w += (c != 0);
  return w;
}

struct MatF3 {
  int rows = 0;
  int cols = 0;
  std::vector<F3> a; // row-major

  MatF3() = default;
  MatF3(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  F3 &at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  F3 at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static MatF3 identity(int n)
  {
    MatF3 m(n, n);
    for (int k = 0; k < n; ++k)
      m.at(k, k) = 1;
    return m;
  }

  static MatF3 from_rows(const std::vector<VecF3> &rows_in)
  {
    if (rows_in.empty())
      return MatF3();
    MatF3 m(static_cast<int>(rows_in.size()), static_cast<int>(rows_in[0].size()));
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = rows_in[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
  }

  VecF3 row(int r) const
  {
    return VecF3(a.begin() + static_cast<std::ptrdiff_t>(r) * cols,
                 a.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols);
  }

  friend bool operator==(const MatF3 &, const MatF3 &) = default;
};

inline MatF3 mat_mul(const MatF3 &x, const MatF3 &y)
{
  if (x.cols != y.rows)
    throw std::invalid_argument("mat_mul: shape mismatch");
  MatF3 r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      F3 v = x.at(i, k);
      if (v == 0)
        continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = f3_add(r.at(i, j), f3_mul(v, y.at(k, j)));
    }
  return r;
}

inline MatF3 mat_add(const MatF3 &x, const MatF3 &y)
{
  MatF3 r(x.rows, x.cols);
  for (std::size_t k = 0; k < r.a.size(); ++k)
    r.a[k] = f3_add(x.a[k], y.a[k]);
  return r;
}

inline MatF3 mat_sub(const MatF3 &x, const MatF3 &y)
{
  MatF3 r(x.rows, x.cols);
  for (std::size_t k = 0; k < r.a.size(); ++k)
    r.a[k] = f3_sub(x.a[k], y.a[k]);
  return r;
}

inline MatF3 mat_neg(const MatF3 &x)
{
  MatF3 r(x.rows, x.cols);
  for (std::size_t k = 0; k < r.a.size(); ++k)
    r.a[k] = f3_neg(x.a[k]);
  return r;
}

inline MatF3 mat_transpose(const MatF3 &x)
{
  MatF3 r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      r.at(j, i) = x.at(i, j);
  return r;
}

inline VecF3 mat_apply(const MatF3 &m, const VecF3 &v)
{
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("mat_apply: shape mismatch");
  VecF3 r(static_cast<std::size_t>(m.rows), 0);
  for (int i = 0; i < m.rows; ++i) {
    int s = 0;
    for (int j = 0; j < m.cols; ++j)
      s += m.at(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = static_cast<F3>(s % 3);
  }
  return r;
}

inline MatF3 mat_pow(MatF3 m, int e)
{
  MatF3 r = MatF3::identity(m.rows);
  for (; e > 0; --e)
    r = mat_mul(r, m);
  return r;
}

// Row echelon form in place; returns rank.  Records pivot columns if asked.
inline int row_reduce(MatF3 &m, std::vector<int> *pivots = nullptr)
{
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int sel = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0)
      continue;
    for (int c = 0; c < m.cols; ++c)
      std::swap(m.a[static_cast<std::size_t>(sel) * m.cols + c],
                m.a[static_cast<std::size_t>(rank) * m.cols + c]);
    F3 inv = f3_inv(m.at(rank, col));
    for (int c = 0; c < m.cols; ++c)
      m.at(rank, c) = f3_mul(inv, m.at(rank, c));
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank)
        continue;
      F3 f = m.at(r, col);
      if (f == 0)
        continue;
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = f3_sub(m.at(r, c), f3_mul(f, m.at(rank, c)));
    }
    if (pivots)
      pivots->push_back(col);
    ++rank;
  }
  return rank;
}

inline int mat_rank(MatF3 m) { return row_reduce(m); }

inline std::vector<VecF3> kernel_basis(const MatF3 &m)
{
  MatF3 r = m;
  std::vector<int> pivots;
  row_reduce(&r == &m ? r : r, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (int p : pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VecF3> basis;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)])
      continue;
    VecF3 v(static_cast<std::size_t>(m.cols), 0);
    v[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t prow = 0; prow < pivots.size(); ++prow) {
      F3 c = r.at(static_cast<int>(prow), free_col);
      v[static_cast<std::size_t>(pivots[prow])] = f3_neg(c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline MatF3 mat_inverse(const MatF3 &m)
{
  if (m.rows != m.cols)
    throw std::invalid_argument("mat_inverse: not square");
  int n = m.rows;
  MatF3 aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots;
  row_reduce(aug, &pivots);
  // The left block reduces to I exactly when the pivots are the first n
  // columns; otherwise m is singular (the identity block always has rank n,
  // so the total rank alone proves nothing).
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(pivots.size()) || pivots[static_cast<std::size_t>(i)] != i)
      throw std::invalid_argument("mat_inverse: singular matrix");
  MatF3 inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

inline F3 mat_det(MatF3 m)
{
  if (m.rows != m.cols)
    throw std::invalid_argument("mat_det: not square");
  F3 det = 1;
  int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0)
      return 0;
    if (sel != col) {
      for (int c = 0; c < n; ++c)
        std::swap(m.a[static_cast<std::size_t>(sel) * n + c],
                  m.a[static_cast<std::size_t>(col) * n + c]);
      det = f3_neg(det);
    }
    det = f3_mul(det, m.at(col, col));
    F3 inv = f3_inv(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      F3 f = f3_mul(inv, m.at(r, col));
      if (f == 0)
        continue;
      for (int c = col; c < n; ++c)
        m.at(r, c) = f3_sub(m.at(r, c), f3_mul(f, m.at(col, c)));
    }
  }
  return det;
}

// Jordan block lengths of a unipotent matrix, from the rank sequence of
// (g-1)^k: the number of parts >= k is rank((g-1)^(k-1)) - rank((g-1)^k).
// Returned sorted descending; parts sum to the dimension.
inline std::vector<int> jordan_partition(const MatF3 &g)
{
  if (g.rows != g.cols)
    throw std::invalid_argument("jordan_partition: not square");
  int n = g.rows;
  MatF3 nil = mat_sub(g, MatF3::identity(n));
  std::vector<int> ranks; // ranks[k] = rank((g-1)^k), k = 0..
  ranks.push_back(n);
  MatF3 p = nil;
  for (int k = 1; k <= n + 1; ++k) {
    int r = mat_rank(p);
    ranks.push_back(r);
    if (r == 0)
      break;
    p = mat_mul(p, nil);
  }
  if (ranks.back() != 0)
    throw std::invalid_argument("jordan_partition: matrix is not unipotent");
  std::vector<int> parts;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    int count = ranks[k - 1] - ranks[k]; // number of parts >= k
    int next = (k + 1 < ranks.size()) ? ranks[k] - ranks[k + 1] : 0;
    for (int j = 0; j < count - next; ++j)
      parts.push_back(static_cast<int>(k));
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// Canonical representatives of the 1-spaces of F3^dim: first nonzero entry 1.
inline std::vector<VecF3> projective_points(int dim)
{
  if (dim < 1)
    throw std::invalid_argument("projective_points: dim must be >= 1");
  std::vector<VecF3> pts;
  long total = 1;
  for (int k = 0; k < dim; ++k)
    total *= 3;
  for (long code = 1; code < total; ++code) {
    VecF3 v(static_cast<std::size_t>(dim), 0);
    long c = code;
    for (int k = dim - 1; k >= 0; --k) {
      v[static_cast<std::size_t>(k)] = static_cast<F3>(c % 3);
      c /= 3;
    }
    F3 first = 0;
    for (F3 e : v)
      if (e != 0) {
        first = e;
        break;
      }
    if (first == 1)
      pts.push_back(std::move(v));
  }
  return pts;
}

// Normalizes a nonzero vector so its first nonzero entry is 1.
inline VecF3 projective_normalize(const VecF3 &v)
{
  for (F3 e : v)
    if (e != 0)
      return (e == 1) ? v : vec_scale(2, v);
  throw std::invalid_argument("projective_normalize: zero vector");
}

struct SymplecticForm {
  MatF3 gram;

  explicit SymplecticForm(MatF3 g) : gram(std::move(g))
  {
    if (gram.rows != gram.cols)
      throw std::invalid_argument("SymplecticForm: not square");
    if (!(mat_transpose(gram) == mat_neg(gram)))
      throw std::invalid_argument("SymplecticForm: not antisymmetric");
    if (mat_det(gram) == 0)
      throw std::invalid_argument("SymplecticForm: degenerate");
  }

  F3 eval(const VecF3 &x, const VecF3 &y) const { return vec_dot(x, mat_apply(gram, y)); }
};

// Standard form [[0,I],[-I,0]] on F3^(2n).
inline SymplecticForm standard_symplectic(int two_n)
{
  int n = two_n / 2;
  MatF3 j(two_n, two_n);
  for (int k = 0; k < n; ++k) {
    j.at(k, n + k) = 1;
    j.at(n + k, k) = 2;
  }
  return SymplecticForm(j);
}

// All 2-dimensional subspaces of F3^4 that are totally isotropic for the
// form, counted by exhaustive scan over projective point pairs.
inline int lagrangian_count(const SymplecticForm &form)
{
  if (form.gram.rows != 4)
    throw std::invalid_argument("lagrangian_count: expected dim 4");
  auto pts = projective_points(4);
  int pairs = 0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (form.eval(pts[a], pts[b]) != 0)
        continue;
      MatF3 span = MatF3::from_rows({pts[a], pts[b]});
      if (mat_rank(span) == 2)
        ++pairs;
    }
  // Each 2-space contains 4 projective points, hence C(4,2) = 6 ordered-free
  // pairs of distinct points spanning it.
  return pairs / 6;
}

// Number of 3-dimensional subspaces of F3^4 (hyperplane count), for the
// consistency checks around the isotropic-subspace counts.
inline int hyperplane_count_f3_4() { return (81 - 1) / 2; }

struct QuadraticForm {
  MatF3 coeffs; // upper triangular

  explicit QuadraticForm(MatF3 c) : coeffs(std::move(c))
  {
    if (coeffs.rows != coeffs.cols)
      throw std::invalid_argument("QuadraticForm: not square");
    for (int i = 0; i < coeffs.rows; ++i)
      for (int j = 0; j < i; ++j)
        if (coeffs.at(i, j) != 0)
          throw std::invalid_argument("QuadraticForm: not upper triangular");
  }

  F3 eval(const VecF3 &v) const { return vec_dot(v, mat_apply(coeffs, v)); }

  // Polarization b(x,y) = q(x+y) - q(x) - q(y).
  F3 polar(const VecF3 &x, const VecF3 &y) const
  {
    return f3_sub(f3_sub(eval(vec_add(x, y)), eval(x)), eval(y));
  }
};

} // namespace gt
