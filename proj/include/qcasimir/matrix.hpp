#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qcasimir/errors.hpp"

namespace qcasimir {

/// Dense row-major matrix over a commutative ring R.
///
/// R must be default-constructible to its zero and provide +, -, * and the
/// free functions is_zero(R) and exact_quotient(R, R) found by ADL.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Drops row i and column j.
  Matrix minor(std::size_t i, std::size_t j) const {
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == j) continue;
        out(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

namespace detail {

template <class R>
void require_square_nonempty(const Matrix<R>& m) {
  if (!m.is_square()) throw Error(Errc::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) throw Error(Errc::InvalidArgument, "determinant of an empty matrix");
}

}  // namespace detail

/// Laplace expansion along the first row, skipping zero entries.
template <class R>
R det_cofactor(const Matrix<R>& m) {
  detail::require_square_nonempty(m);
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  R sum{};
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    R term = m(0, j) * det_cofactor(m.minor(0, j));
    if (j % 2 == 0)
      sum = sum + term;
    else
      sum = sum - term;
  }
  return sum;
}

/// Fraction-free (Bareiss) elimination; every division is exact.
template <class R>
R det_bareiss(Matrix<R> m) {
  detail::require_square_nonempty(m);
  const std::size_t n = m.rows();
  bool negate = false;
  R prev{};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return R{};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = k == 0 ? std::move(v) : exact_quotient(v, prev);
      }
    }
    prev = m(k, k);
  }
  R det = m(n - 1, n - 1);
  return negate ? R{} - det : det;
}

/// Exact determinant: cofactor expansion up to size 6, Bareiss beyond.
template <class R>
R det_exact(const Matrix<R>& m) {
  return m.rows() <= 6 ? det_cofactor(m) : det_bareiss(m);
}

}  // namespace qcasimir
