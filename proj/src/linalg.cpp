/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "pentaspace/linalg.hpp"

#include <utility>

namespace pentaspace {

MatQ::MatQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::invalid_argument, "matrix dimensions must be positive");
  }
}

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Rational> solve_exact(const MatQ& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) {
    throw Error(ErrorCode::invalid_argument, "solve_exact requires a square matrix");
  }
  if (b.size() != n) {
    throw Error(ErrorCode::invalid_argument, "right-hand side length does not match matrix");
  }

  // Augmented working copy.
  MatQ m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, n) = b[i];
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) {
      throw Error(ErrorCode::singular_matrix, "zero pivot column during elimination");
    }
    if (pivot != col) {
      for (std::size_t j = col; j <= n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
    }
    const Rational inv_pivot = Rational(1) / m.at(col, col);
    for (std::size_t j = col; j <= n; ++j) m.at(col, j) *= inv_pivot;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m.at(row, col) == 0) continue;
      const Rational factor = m.at(row, col);
      for (std::size_t j = col; j <= n; ++j) m.at(row, j) -= factor * m.at(col, j);
    }
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = m.at(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= m.at(i, j) * x[j];
    x[i] = std::move(acc);
  }
  return x;
}

}  // namespace pentaspace
