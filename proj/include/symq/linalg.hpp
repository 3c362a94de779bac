#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symq/rational.hpp"

namespace symq {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const Rational> values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by row reduction. Rows are folded into an echelon basis one
/// at a time; the pivot of each new basis row is its first nonzero column.
/// Stops early once the rank reaches the column count.
std::size_t rank(const RationalMatrix& m);

/// Dimension of the right null space {x : M x = 0}.
std::size_t kernel_dimension(const RationalMatrix& m);

}  // namespace symq
