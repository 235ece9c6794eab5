#include "rowmotion/matrix.hpp"

#include <utility>

namespace rowmotion {

mpz_class bareiss_determinant(IntegerMatrix m) {
  const int n = m.rows();
  if (m.cols() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return 1;

  int sign = 1;
  mpz_class previous_pivot = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_row = -1;
      for (int row = k + 1; row < n; ++row) {
        if (m(row, k) != 0) {
          swap_row = row;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int col = 0; col < n; ++col) std::swap(m(k, col), m(swap_row, col));
      sign = -sign;
    }
    for (int row = k + 1; row < n; ++row) {
      for (int col = k + 1; col < n; ++col) {
        mpz_class value = m(row, col) * m(k, k) - m(row, k) * m(k, col);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(),
                     previous_pivot.get_mpz_t());
        m(row, col) = std::move(value);
      }
    }
    previous_pivot = m(k, k);
  }
  mpz_class det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

Rational determinant(const RationalMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw DomainError("determinant of a non-square matrix");
  IntegerMatrix scaled(n, n);
  mpz_class scale = 1;
  for (int row = 0; row < n; ++row) {
    mpz_class row_lcm = 1;
    for (int col = 0; col < n; ++col) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
              m(row, col).denominator().get_mpz_t());
    }
    for (int col = 0; col < n; ++col) {
      scaled(row, col) =
          m(row, col).numerator() * (row_lcm / m(row, col).denominator());
    }
    scale *= row_lcm;
  }
  return Rational(bareiss_determinant(std::move(scaled)), scale);
}

}  // namespace rowmotion
