#include "rweb/matrix.hpp"

namespace rweb {

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::from_rows(const std::vector<std::vector<Rat>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  MatQ m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw internal_error("ragged rows in from_rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

MatQ MatQ::transposed() const {
  MatQ t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Rat> MatQ::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw internal_error("apply: size mismatch");
  std::vector<Rat> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

namespace {

// Shared kernel extraction: given an echelon matrix (integer entries, pivot
// rows/cols recorded), back-substitute one kernel vector per free column.
std::vector<std::vector<Rat>> kernel_from_echelon(const std::vector<std::vector<Int>>& a,
                                                  const std::vector<int>& pivot_cols, int cols) {
  int rank = static_cast<int>(pivot_cols.size());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> kernel;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (int pr = rank - 1; pr >= 0; --pr) {
      int pc = pivot_cols[pr];
      Rat s = 0;
      for (int j = pc + 1; j < cols; ++j)
        if (a[pr][j] != 0 && v[j] != 0) s += Rat(a[pr][j]) * v[j];
      v[pc] = -s / Rat(a[pr][pc]);
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

RankKernel rank_kernel_int(std::vector<std::vector<Int>> a, int cols) {
  int rows = static_cast<int>(a.size());
  std::vector<int> pivot_cols;
  Int prev = 1;
  int prow = 0;
  for (int c = 0; c < cols && prow < rows; ++c) {
    int sel = -1;
    for (int i = prow; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[prow], a[sel]);
    // Bareiss one-step fraction-free update; the division by the previous
    // pivot is exact (entries are minors of the original matrix).
    for (int i = prow + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Int t = a[i][j] * a[prow][c] - a[i][c] * a[prow][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = a[prow][c];
    pivot_cols.push_back(c);
    ++prow;
  }
  RankKernel rk;
  rk.rank = static_cast<int>(pivot_cols.size());
  rk.kernel = kernel_from_echelon(a, pivot_cols, cols);
  return rk;
}

RankKernel rank_kernel(const MatQ& m) {
  // Clear denominators row by row (row scaling changes neither rank nor kernel).
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      Rat s = m.at(i, j) * Rat(l);
      a[i][j] = s.get_num();
    }
  }
  return rank_kernel_int(std::move(a), m.cols());
}

RankKernel rank_kernel_naive(const MatQ& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  std::vector<int> pivot_cols;
  int prow = 0;
  for (int c = 0; c < cols && prow < rows; ++c) {
    int sel = -1;
    for (int i = prow; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[prow], a[sel]);
    for (int i = prow + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[prow][c];
      a[i][c] = 0;
      for (int j = c + 1; j < cols; ++j)
        if (a[prow][j] != 0) a[i][j] -= f * a[prow][j];
    }
    pivot_cols.push_back(c);
    ++prow;
  }

  int rank = static_cast<int>(pivot_cols.size());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  RankKernel rk;
  rk.rank = rank;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (int pr = rank - 1; pr >= 0; --pr) {
      int pc = pivot_cols[pr];
      Rat s = 0;
      for (int j = pc + 1; j < cols; ++j)
        if (a[pr][j] != 0 && v[j] != 0) s += a[pr][j] * v[j];
      v[pc] = -s / a[pr][pc];
    }
    rk.kernel.push_back(std::move(v));
  }
  return rk;
}

int rank_of(const MatQ& m) { return rank_kernel(m).rank; }

}  // namespace rweb
