#pragma once

#include "rweb/basics.hpp"

#include <vector>

namespace rweb {

// Dense rational matrix, row major. All paper instances are small enough
// (~10^3 columns worst case) that dense storage is the right trade.
class MatQ {
 public:
  MatQ() : rows_(0), cols_(0) {}
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  static MatQ identity(int n);
  static MatQ from_rows(const std::vector<std::vector<Rat>>& rows);

  MatQ transposed() const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;  // m * v

  bool operator==(const MatQ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

struct RankKernel {
  int rank = 0;
  // Reduced column-echelon kernel basis: one vector per free column, the
  // free coordinate set to 1 and all other free coordinates 0. Deterministic.
  std::vector<std::vector<Rat>> kernel;
};

// Fraction-free (Bareiss) elimination with rational back-substitution.
RankKernel rank_kernel(const MatQ& m);

// Plain rational Gaussian elimination. Kept as an independent oracle for
// property tests; do not fold the two implementations together.
RankKernel rank_kernel_naive(const MatQ& m);

int rank_of(const MatQ& m);

// Bareiss rank/kernel over integer rows (used on the large Gram matrices
// where entries start integral; avoids mpq overhead in the hot loop).
RankKernel rank_kernel_int(std::vector<std::vector<Int>> rows, int cols);

}  // namespace rweb
