#ifndef ALEXSPAN_MATRIX_HPP_
#define ALEXSPAN_MATRIX_HPP_

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "alexspan/errors.hpp"

namespace alexspan
{

/// Dense row-major matrix over an exact ring.
template<typename T>
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
  : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T & operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T & operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix &) const = default;

  T row_sum(std::size_t i) const
  {
    T s(0);
    for (std::size_t j = 0; j < cols_; ++j) {s += (*this)(i, j);}
    return s;
  }

  T col_sum(std::size_t j) const
  {
    T s(0);
    for (std::size_t i = 0; i < rows_; ++i) {s += (*this)(i, j);}
    return s;
  }

  /// Copy with row `r` and column `c` removed.
  Matrix without(std::size_t r, std::size_t c) const
  {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) {continue;}
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) {continue;}
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Row-major, entries separated by one space, one row per line.
template<typename T>
std::ostream & operator<<(std::ostream & os, const Matrix<T> & m)
{
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) {os << ' ';}
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

/**
 * @brief Determinant by fraction-free (Bareiss) elimination.
 *
 * Every intermediate entry is a minor of the input, so all divisions are
 * exact. Zero pivots are handled by row swaps. The 0x0 determinant is 1.
 */
template<typename T>
T bareiss_determinant(Matrix<T> m)
{
  if (m.rows() != m.cols()) {
    throw InvalidInput("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) {return T(1);}
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) {++p;}
      if (p == n) {return T(0);}
      for (std::size_t j = 0; j < n; ++j) {std::swap(m(k, j), m(p, j));}
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Signed cofactor (-1)^(i+j) det(M without row i, column j).
template<typename T>
T cofactor(const Matrix<T> & m, std::size_t i, std::size_t j)
{
  T d = bareiss_determinant(m.without(i, j));
  return ((i + j) % 2 == 0) ? d : T(-d);
}

}  // namespace alexspan

#endif  // ALEXSPAN_MATRIX_HPP_
