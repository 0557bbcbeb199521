#pragma once

#include <cstddef>
#include <vector>

#include "cylat/lattice.hpp"

namespace cylat {

// Dense matrix of exact integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntegerMatrix&) const = default;

  IntegerMatrix operator*(const IntegerMatrix& o) const;

  // Exact determinant of a square matrix (Bareiss elimination).
  Int determinant() const;

  IntegerMatrix with_appended_column(const std::vector<Int>& col) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

// d = u * input * v with u, v unimodular; the nonzero diagonal of d is
// the invariant-factor chain d1 | d2 | ... | dr, all positive.
struct SmithDecomposition {
  IntegerMatrix d;
  IntegerMatrix u;
  IntegerMatrix v;
  std::vector<Int> invariants;
  std::size_t rank = 0;
  std::size_t kernel_rank = 0;  // cols - rank
};

SmithDecomposition smith_normal_form(const IntegerMatrix& input);

std::size_t rank_of(const IntegerMatrix& m);

}  // namespace cylat
