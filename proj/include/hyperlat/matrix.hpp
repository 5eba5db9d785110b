#pragma once

// Exact dense linear algebra over the scalar types of scalar.hpp. Everything
// here is a free function template on the scalar; fields need + - * / and ==,
// Euclidean rings need divmod() and canonical_unit(), ordered fields need
// sign().

#include "hyperlat/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace hyperlat {

using Index = Eigen::Index;

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <class T>
bool is_zero(const T& x) {
  return x == T(0);
}

template <class To, class From>
Mat<To> cast_exact(const Mat<From>& m) {
  Mat<To> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

template <class T>
Mat<T> conjugate_transpose(const Mat<T>& m) {
  Mat<T> out(m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
  return out;
}

template <class T>
Mat<T> conjugate(const Mat<T>& m) {
  Mat<T> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = conj(m(i, j));
  return out;
}

template <class T>
Mat<T> identity(Index n) {
  Mat<T> m = Mat<T>::Constant(n, n, T(0));
  for (Index i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
Mat<T> zeros(Index r, Index c) {
  return Mat<T>::Constant(r, c, T(0));
}

/// Exact product; avoids Eigen's blocked kernels for heavyweight scalars.
template <class T>
Mat<T> multiply(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> out = zeros<T>(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace detail {

template <class T>
void swap_rows(Mat<T>& m, Index i, Index j) {
  if (i == j) return;
  for (Index c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

// row(i) -= q * row(j)
template <class T>
void axpy_row(Mat<T>& m, Index i, const T& q, Index j) {
  if (is_zero(q)) return;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_zero(m(j, c))) m(i, c) -= q * m(j, c);
}

template <class T>
void scale_row(Mat<T>& m, Index i, const T& s) {
  for (Index c = 0; c < m.cols(); ++c) m(i, c) = s * m(i, c);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fields

template <class F>
struct Echelon {
  Mat<F> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form (pivots normalized to 1).
template <class F>
Echelon<F> reduced_row_echelon(Mat<F> m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    detail::swap_rows(m, row, p);
    F inv = F(1) / m(row, col);
    detail::scale_row(m, row, inv);
    for (Index r = 0; r < m.rows(); ++r)
      if (r != row && !is_zero(m(r, col))) detail::axpy_row(m, r, F(m(r, col)), row);
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
Index rank(const Mat<F>& m) {
  return reduced_row_echelon(m).rank();
}

/// Right null space as columns; the free coordinate of each basis vector is 1.
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
  Echelon<F> e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  std::vector<Index> free;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat<F> k = zeros<F>(m.cols(), static_cast<Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = F(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

/// A particular solution X of m X = rhs (free variables zero); nullopt when
/// the system is inconsistent.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& m, const Mat<F>& rhs) {
  Mat<F> aug(m.rows(), m.cols() + rhs.cols());
  aug << m, rhs;
  Echelon<F> e = reduced_row_echelon(std::move(aug));
  Mat<F> x = zeros<F>(m.cols(), rhs.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= m.cols()) return std::nullopt;
    for (Index j = 0; j < rhs.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, m.cols() + j);
  }
  return x;
}

template <class F>
F determinant(Mat<F> m) {
  const Index n = m.rows();
  F det(1);
  for (Index col = 0; col < n; ++col) {
    Index p = col;
    while (p < n && is_zero(m(p, col))) ++p;
    if (p == n) return F(0);
    if (p != col) {
      detail::swap_rows(m, col, p);
      det = -det;
    }
    det = det * m(col, col);
    F inv = F(1) / m(col, col);
    for (Index r = col + 1; r < n; ++r)
      if (!is_zero(m(r, col))) detail::axpy_row(m, r, F(m(r, col) * inv), col);
  }
  return det;
}

/// Indices of the leftmost maximal linearly independent subset of rows.
template <class F>
std::vector<Index> independent_rows(const Mat<F>& m) {
  Echelon<F> e = reduced_row_echelon(Mat<F>(m.transpose()));
  return e.pivots;
}

// ---------------------------------------------------------------------------
// Ordered fields

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature of a symmetric matrix by congruence elimination.
template <class F>
Signature symmetric_signature(Mat<F> a) {
  const Index n = a.rows();
  std::vector<bool> active(n, true);
  Signature s;
  Index remaining = n;
  while (remaining > 0) {
    Index piv = -1;
    for (Index i = 0; i < n && piv < 0; ++i)
      if (active[i] && !is_zero(a(i, i))) piv = i;
    if (piv < 0) {
      // all active diagonal entries vanish: e_i <- e_i + e_j makes a(i,i) = 2 a(i,j)
      Index bi = -1, bj = -1;
      for (Index i = 0; i < n && bi < 0; ++i) {
        if (!active[i]) continue;
        for (Index j = 0; j < n; ++j)
          if (j != i && active[j] && !is_zero(a(i, j))) {
            bi = i;
            bj = j;
            break;
          }
      }
      if (bi < 0) break;
      for (Index k = 0; k < n; ++k) a(bi, k) += a(bj, k);
      for (Index k = 0; k < n; ++k) a(k, bi) += a(k, bj);
      piv = bi;
    }
    const F d = a(piv, piv);
    if (sign(d) > 0)
      ++s.positive;
    else
      ++s.negative;
    active[piv] = false;
    --remaining;
    for (Index j = 0; j < n; ++j) {
      if (!active[j] || is_zero(a(j, piv))) continue;
      F f = a(j, piv) / d;
      for (Index k = 0; k < n; ++k)
        if (active[k]) a(j, k) -= f * a(piv, k);
    }
    for (Index j = 0; j < n; ++j) {
      a(j, piv) = F(0);
      a(piv, j) = F(0);
    }
  }
  s.zero = static_cast<int>(remaining);
  return s;
}

// ---------------------------------------------------------------------------
// Euclidean rings (Z[omega], Z[i])

template <class R>
struct Hermite {
  Mat<R> transform;  // unimodular U
  Mat<R> form;       // H = U * input, nonzero rows first
  Index rank = 0;
};

/// Row Hermite form over a Euclidean ring. Rows rank.. of the transform are a
/// saturated basis of the left kernel; rows ..rank of the form are a basis of
/// the row module.
template <class R>
Hermite<R> hermite_rows(const Mat<R>& a) {
  Mat<R> h = a;
  Mat<R> u = identity<R>(a.rows());
  const Index rows = a.rows();
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < rows; ++col) {
    for (;;) {
      Index best = -1;
      Integer best_norm;
      for (Index r = row; r < rows; ++r) {
        if (is_zero(h(r, col))) continue;
        Integer nr = norm(h(r, col));
        if (best < 0 || nr < best_norm) {
          best = r;
          best_norm = nr;
        }
      }
      if (best < 0) break;
      detail::swap_rows(h, row, best);
      detail::swap_rows(u, row, best);
      bool done = true;
      for (Index r = row + 1; r < rows; ++r) {
        if (is_zero(h(r, col))) continue;
        R q = divmod(h(r, col), h(row, col)).quotient;
        detail::axpy_row(h, r, q, row);
        detail::axpy_row(u, r, q, row);
        if (!is_zero(h(r, col))) done = false;
      }
      if (done) break;
    }
    if (is_zero(h(row, col))) continue;
    R unit = canonical_unit(h(row, col));
    detail::scale_row(h, row, unit);
    detail::scale_row(u, row, unit);
    for (Index r = 0; r < row; ++r) {
      if (is_zero(h(r, col))) continue;
      R q = divmod(h(r, col), h(row, col)).quotient;
      detail::axpy_row(h, r, q, row);
      detail::axpy_row(u, r, q, row);
    }
    ++row;
  }
  return {std::move(u), std::move(h), row};
}

}  // namespace hyperlat
