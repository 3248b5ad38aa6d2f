#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zariski/rational.hpp"

namespace zariski {

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Every division is exact, so Scalar may be an exact integer type as well
/// as an exact field.
template <typename Scalar>
Scalar determinant(MatrixX<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Leading principal minors det(A[0..k, 0..k]) for k = 1..n.
///
/// Bareiss elimination without pivoting produces the leading minors as its
/// successive pivots. Once a zero pivot appears the remaining minors are
/// taken from explicit determinants of the leading blocks.
template <typename Scalar>
std::vector<Scalar> leading_principal_minors(const MatrixX<Scalar>& matrix) {
  const Eigen::Index n = matrix.rows();
  std::vector<Scalar> minors;
  minors.reserve(static_cast<std::size_t>(n));
  MatrixX<Scalar> a = matrix;
  Scalar previous(1);
  Eigen::Index k = 0;
  for (; k < n; ++k) {
    minors.push_back(a(k, k));
    if (a(k, k) == 0) break;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  for (++k; k < n; ++k) {
    minors.push_back(determinant<Scalar>(matrix.topLeftCorner(k + 1, k + 1)));
  }
  return minors;
}

/// Solves A x = b exactly. Forward elimination is fraction-free (Bareiss),
/// back substitution divides, so Scalar must be an exact field. Returns
/// nullopt when A is singular.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_exact(const MatrixX<Scalar>& matrix,
                                           const VectorX<Scalar>& rhs) {
  const Eigen::Index n = matrix.rows();
  MatrixX<Scalar> a(n, n + 1);
  a.leftCols(n) = matrix;
  a.col(n) = rhs;
  Scalar previous(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return std::nullopt;
      a.row(k).swap(a.row(pivot));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j <= n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = Scalar(0);
    }
    previous = a(k, k);
  }
  VectorX<Scalar> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar acc = a(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x(j);
    x(i) = acc / a(i, i);
  }
  return x;
}

/// The principal submatrix on the given (ordered) index set.
template <typename Derived>
MatrixX<typename Derived::Scalar> principal_submatrix(
    const Eigen::MatrixBase<Derived>& matrix, const std::vector<Eigen::Index>& indices) {
  return matrix(indices, indices);
}

template <typename Derived>
VectorX<typename Derived::Scalar> gather(const Eigen::MatrixBase<Derived>& vector,
                                         const std::vector<Eigen::Index>& indices) {
  return vector(indices);
}

/// x^T A x.
template <typename Scalar>
Scalar quadratic_form(const MatrixX<Scalar>& matrix, const VectorX<Scalar>& x) {
  return x.dot(matrix * x);
}

}  // namespace zariski
