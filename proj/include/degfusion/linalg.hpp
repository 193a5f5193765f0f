#pragma once

#include <cstddef>
#include <vector>

#include "degfusion/rational.hpp"

namespace degfusion {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Basis of {v : M v = 0}, one vector per free column of the reduced row
/// echelon form. Each vector has coefficient 1 at its free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Bareiss fraction-free elimination on the integer-scaled matrix.
Rational determinant(const RationalMatrix& m);

}  // namespace degfusion
