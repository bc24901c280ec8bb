#pragma once

#include <cstddef>
#include <vector>

#include "mae/rational.hpp"

namespace mae {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RationalVector row(std::size_t r) const;
  RationalMatrix transposed() const;
  bool operator==(const RationalMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<RationalVector> kernel_basis;
};

// Rank by fraction-free (Bareiss) elimination on the integer-scaled matrix.
std::size_t rank(const RationalMatrix& m);
// Reduced row-echelon form with zero rows dropped.
RationalMatrix rref(const RationalMatrix& m);
RankKernel rank_kernel(const RationalMatrix& m);
bool same_row_space(const RationalMatrix& a, const RationalMatrix& b);
Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace mae
