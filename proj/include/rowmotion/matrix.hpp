#pragma once

// Dense matrices over exact rationals and integers, with fraction-free
// (Bareiss) determinants.

#include <vector>

#include <gmpxx.h>

#include "rowmotion/rational.hpp"

namespace rowmotion {

template <typename Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const Scalar& fill = Scalar(0))
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows * cols), fill) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // 0-based element access.
  Scalar& operator()(int row, int col) {
    return data_[static_cast<std::size_t>(row * cols_ + col)];
  }
  const Scalar& operator()(int row, int col) const {
    return data_[static_cast<std::size_t>(row * cols_ + col)];
  }

  /// The k x k block whose top-left entry is (row, col), 1-based.
  Matrix solid_submatrix(int row, int col, int k) const {
    if (k < 0 || row < 1 || col < 1 || row + k - 1 > rows_ ||
        col + k - 1 > cols_) {
      throw DomainError("solid submatrix out of range");
    }
    Matrix out(k, k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) out(a, b) = (*this)(row - 1 + a, col - 1 + b);
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<mpz_class>;

/// Determinant of a square integer matrix by Bareiss elimination with row
/// pivoting. Every intermediate quotient is exact. The empty matrix has
/// determinant 1.
mpz_class bareiss_determinant(IntegerMatrix m);

/// Determinant of a square rational matrix: each row is scaled by the lcm of
/// its denominators, the integer determinant is taken by Bareiss, and the
/// product of the scale factors is divided back out.
Rational determinant(const RationalMatrix& m);

}  // namespace rowmotion
