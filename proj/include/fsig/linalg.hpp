#ifndef FSIG_LINALG_HPP
#define FSIG_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fsig/prime_field.hpp"

namespace fsig::linalg {

/// Dense row-major matrix over F_p.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
};

/// Brings `m` to reduced row echelon form in place and returns the pivot
/// column of each nonzero row, in row order. Rows past the rank are zero.
std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& field);

std::size_t rank(Matrix m, const PrimeField& field);

/// Basis of { v : m v = 0 }, one vector of length m.cols() per free column.
std::vector<std::vector<Coeff>> kernel(Matrix m, const PrimeField& field);

}  // namespace fsig::linalg

#endif  // FSIG_LINALG_HPP
