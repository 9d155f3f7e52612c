/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "pentaspace/rational.hpp"

namespace pentaspace {

/// Dense rational matrix with fixed dimensions.
class MatQ {
 public:
  MatQ(std::size_t rows, std::size_t cols);

  static MatQ identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }
  const Rational& at(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Solve A x = b exactly by Gaussian elimination over the rationals, pivoting
/// on the first nonzero entry of each column. Throws Error(singular_matrix)
/// when a pivot column is zero, Error(invalid_argument) on shape mismatch.
std::vector<Rational> solve_exact(const MatQ& a, const std::vector<Rational>& b);

}  // namespace pentaspace
