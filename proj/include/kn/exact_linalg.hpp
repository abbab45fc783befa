#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "kn/eigen_traits.hpp"
#include "kn/error.hpp"

namespace kn {

/// Matrix with row i and column j removed.
template <class Derived>
MatrixX<typename Derived::Scalar> minor_matrix(const Eigen::MatrixBase<Derived>& m, Eigen::Index i,
                                               Eigen::Index j) {
  using S = typename Derived::Scalar;
  Eigen::Index n = m.rows();
  MatrixX<S> r(n - 1, m.cols() - 1);
  for (Eigen::Index a = 0, ra = 0; a < n; ++a) {
    if (a == i) continue;
    for (Eigen::Index b = 0, rb = 0; b < m.cols(); ++b) {
      if (b == j) continue;
      r(ra, rb++) = m(a, b);
    }
    ++ra;
  }
  return r;
}

/// Determinant over any commutative ring, by expansion along rows with the
/// minors on each column subset shared (O(2^n n) ring operations).
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n > 20) throw InvalidArgument("determinant: matrix too large");
  // d[s] = det of rows 0..|s|-1 against the columns in s.
  std::vector<S> d(std::size_t(1) << n, S(0));
  std::vector<bool> nz(d.size(), false);
  d[0] = S(1);
  nz[0] = true;
  for (std::size_t s = 1; s < d.size(); ++s) {
    Eigen::Index row = __builtin_popcountll(s) - 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!(s >> j & 1)) continue;
      std::size_t rest = s & ~(std::size_t(1) << j);
      int pos = __builtin_popcountll(s >> (j + 1));
      if (!nz[rest] || m(row, j).is_zero()) continue;
      S term = m(row, j) * d[rest];
      d[s] = (pos % 2 == 0) ? d[s] + term : d[s] - term;
    }
    nz[s] = !d[s].is_zero();
  }
  return d.back();
}

/// Cofactor (-1)^(i+j) det(minor(i, j)).
template <class Derived>
typename Derived::Scalar cofactor(const Eigen::MatrixBase<Derived>& m, Eigen::Index i,
                                  Eigen::Index j) {
  auto d = determinant(minor_matrix(m, i, j));
  return ((i + j) % 2 == 0) ? d : -d;
}

template <class S>
bool is_zero_matrix(const MatrixX<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class S>
bool exact_equal(const MatrixX<S>& a, const MatrixX<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Reduced row echelon form over a field; returns pivot columns.
template <class S>
std::vector<Eigen::Index> rref(MatrixX<S>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    S inv = S(1) / m(row, col);
    for (Eigen::Index k = col; k < m.cols(); ++k) m(row, k) = m(row, k) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      S f = m(r, col);
      for (Eigen::Index k = col; k < m.cols(); ++k) m(r, k) = m(r, k) - f * m(row, k);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
Eigen::Index rank(MatrixX<S> m) {
  return static_cast<Eigen::Index>(rref(m).size());
}

/// Basis of {x : m x = 0} as the columns of the result.
template <class S>
MatrixX<S> nullspace(MatrixX<S> m) {
  std::vector<Eigen::Index> piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  MatrixX<S> out(m.cols(), static_cast<Eigen::Index>(free.size()));
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = S(0);
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], k) = S(1);
    for (std::size_t r = 0; r < piv.size(); ++r) out(piv[r], k) = -m(r, free[k]);
  }
  return out;
}

/// Inverse over a commutative ring by Gauss-Jordan with unit pivots.
/// Returns false when no unit pivot is available at some step.
template <class S>
bool unit_pivot_inverse(MatrixX<S> m, MatrixX<S>& inv) {
  Eigen::Index n = m.rows();
  inv = MatrixX<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = S(i == j ? 1 : 0);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && !m(piv, c).is_unit()) ++piv;
    if (piv == n) return false;
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      inv.row(piv).swap(inv.row(c));
    }
    S u = m(c, c).inverse();
    for (Eigen::Index k = 0; k < n; ++k) {
      m(c, k) = m(c, k) * u;
      inv(c, k) = inv(c, k) * u;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      S f = m(r, c);
      for (Eigen::Index k = 0; k < n; ++k) {
        m(r, k) = m(r, k) - f * m(c, k);
        inv(r, k) = inv(r, k) - f * inv(c, k);
      }
    }
  }
  return true;
}

/// Inverse over a commutative ring as adj(m) / det(m). Returns false when
/// det(m) is not a unit.
template <class S>
bool adjugate_inverse(const MatrixX<S>& m, MatrixX<S>& inv) {
  Eigen::Index n = m.rows();
  S det = determinant(m);
  if (!det.is_unit()) return false;
  S u = det.inverse();
  inv = MatrixX<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = cofactor(m, j, i) * u;
  return true;
}

}  // namespace kn
