#pragma once

// Exact linear algebra over the integers and rationals.

#include "exrel/types.hpp"


#include <numeric>
#include <optional>
#include <utility>

namespace exrel {

template <typename Derived>
Matrix<Rational> to_rational(const Eigen::MatrixBase<Derived>& m) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(static_cast<Int>(m(i, j)));
  return r;
}

/// Reduced row echelon form in place; returns pivot column per pivot row.
template <typename Scalar>
std::vector<Eigen::Index> row_reduce(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Scales a rational vector to the primitive integer vector on the same ray,
/// sign-normalized so the first nonzero entry is positive.
IntVector primitive_integer(const Vector<Rational>& v);

/// Basis of the right kernel of an integer matrix, as primitive integer
/// vectors ordered by free column.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Solves m x = b exactly; nullopt if m is singular.
std::optional<Vector<Rational>> solve_exact(const IntMatrix& m, const IntVector& b);

/// Inverse of a unimodular integer matrix computed by integer row operations.
/// Throws InternalInvariantViolation if the determinant is not +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

Rational determinant(const IntMatrix& m);

}  // namespace exrel
