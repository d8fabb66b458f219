#pragma once

#include <cstddef>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Row-major dense matrix over the rationals.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row. Among the nonzero candidates in a column the entry with the
/// smallest bit size is chosen as pivot.
std::vector<std::size_t> rref(Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, with that free
/// variable set to 1 and the other free variables 0.
std::vector<std::vector<Rational>> nullspace(Matrix m);

/// m * x
std::vector<Rational> multiply(const Matrix& m, const std::vector<Rational>& x);

}  // namespace holo
