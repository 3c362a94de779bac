#include "symq/linalg.hpp"

#include <stdexcept>

namespace symq {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::size_t rank(const RationalMatrix& m) {
  struct BasisRow {
    std::size_t pivot;
    std::vector<Rational> values;  // values[pivot] == 1, zero before pivot
  };
  std::vector<BasisRow> basis;  // ascending pivot order
  const std::size_t cols = m.cols();

  for (std::size_t r = 0; r < m.rows() && basis.size() < cols; ++r) {
    std::vector<Rational> x(m.row(r).begin(), m.row(r).end());
    for (const auto& b : basis) {
      if (x[b.pivot].is_zero()) continue;
      const Rational factor = x[b.pivot];
      for (std::size_t c = b.pivot; c < cols; ++c) {
        if (!b.values[c].is_zero()) x[c] -= factor * b.values[c];
      }
    }
    std::size_t pivot = 0;
    while (pivot < cols && x[pivot].is_zero()) ++pivot;
    if (pivot == cols) continue;
    const Rational lead = x[pivot];
    for (std::size_t c = pivot; c < cols; ++c) x[c] /= lead;
    auto pos = basis.begin();
    while (pos != basis.end() && pos->pivot < pivot) ++pos;
    basis.insert(pos, BasisRow{pivot, std::move(x)});
  }
  return basis.size();
}

std::size_t kernel_dimension(const RationalMatrix& m) { return m.cols() - rank(m); }

}  // namespace symq
