#pragma once

#include <cstddef>
#include <vector>

#include "qmflab/exactnum.hpp"

namespace qmflab {

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Rat>& row);
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

/// Basis of {v : m v = 0}. Each vector has its first nonzero entry equal to 1,
/// ordered by free column.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

/// Unique solution of m x = rhs. Throws std::domain_error when the system is
/// inconsistent or underdetermined.
std::vector<Rat> solve_unique(const RatMatrix& m, const std::vector<Rat>& rhs);

}  // namespace qmflab
