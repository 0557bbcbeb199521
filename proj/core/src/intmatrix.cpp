#include "cylat/intmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace cylat {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntegerMatrix: dimension mismatch");
  IntegerMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += aik * o.at(k, j);
    }
  return out;
}

Int IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        // Bareiss: the division by the previous pivot is exact.
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

IntegerMatrix IntegerMatrix::with_appended_column(const std::vector<Int>& col) const {
  if (col.size() != rows_)
    throw std::invalid_argument("with_appended_column: wrong column length");
  IntegerMatrix out(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    out.at(i, cols_) = col[i];
  }
  return out;
}

namespace {

struct SmithWorker {
  IntegerMatrix a, u, v;
  std::size_t rows, cols;

  explicit SmithWorker(const IntegerMatrix& input)
      : a(input),
        u(IntegerMatrix::identity(input.rows())),
        v(IntegerMatrix::identity(input.cols())),
        rows(input.rows()),
        cols(input.cols()) {}

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(r1, j), u.at(r2, j));
  }

  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, c1), v.at(i, c2));
  }

  // row[dst] += q * row[src], mirrored on u.
  void add_row(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < cols; ++j) a.at(dst, j) += q * a.at(src, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) += q * u.at(src, j);
  }

  // col[dst] += q * col[src], mirrored on v.
  void add_col(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < rows; ++i) a.at(i, dst) += q * a.at(i, src);
    for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) += q * v.at(i, src);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) a.at(r, j) = -a.at(r, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
  }

  bool pick_pivot(std::size_t t) {
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a.at(i, j) == 0) continue;
        if (!found || cmpabs(a.at(i, j), a.at(pi, pj)) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, pi);
    swap_cols(t, pj);
    return true;
  }

  static int cmpabs(const Int& x, const Int& y) {
    return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        if (q != 0) add_row(i, t, -q);
        if (a.at(i, t) != 0) {
          // Nonzero remainder: it is smaller than the pivot, promote it.
          swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        if (q != 0) add_col(j, t, -q);
        if (a.at(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot row and column are clear; make the pivot divide the rest
      // of the block so the invariant chain comes out sorted.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) return;
    }
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& input) {
  SmithWorker w(input);
  const std::size_t nmin = std::min(w.rows, w.cols);
  std::size_t t = 0;
  while (t < nmin) {
    if (!w.pick_pivot(t)) break;
    w.reduce_at(t);
    if (w.a.at(t, t) < 0) w.negate_row(t);
    ++t;
  }
  SmithDecomposition out;
  out.invariants.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.invariants.push_back(w.a.at(i, i));
  out.rank = t;
  out.kernel_rank = w.cols - t;
  out.d = std::move(w.a);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  return out;
}

std::size_t rank_of(const IntegerMatrix& m) {
  return smith_normal_form(m).rank;
}

}  // namespace cylat
