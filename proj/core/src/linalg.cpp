#include "mvwb/linalg.hpp"

#include <algorithm>

#include "mvwb/errors.hpp"

namespace mvwb {

QMatrix QMatrix::identity(long n) {
  QMatrix m(n, n);
  for (long i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

Rational& QMatrix::at(long i, long j) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw IndexOutOfRange("matrix entry");
  return d_[(i - 1) * cols_ + (j - 1)];
}

const Rational& QMatrix::at(long i, long j) const {
  return const_cast<QMatrix*>(this)->at(i, j);
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw SizeMismatch("matrix product");
  QMatrix r(rows_, o.cols_);
  for (long i = 1; i <= rows_; ++i)
    for (long k = 1; k <= cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (long j = 1; j <= o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (b == 0) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix sum");
  QMatrix r = *this;
  for (size_t k = 0; k < d_.size(); ++k) r.d_[k] += o.d_[k];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix diff");
  QMatrix r = *this;
  for (size_t k = 0; k < d_.size(); ++k) r.d_[k] -= o.d_[k];
  return r;
}

QMatrix QMatrix::operator*(const Rational& s) const {
  QMatrix r = *this;
  for (auto& x : r.d_) x *= s;
  return r;
}

QMatrix QMatrix::pow(long k) const {
  if (rows_ != cols_) throw SizeMismatch("power of non-square matrix");
  QMatrix acc = identity(rows_);
  for (long i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (long i = 1; i <= rows_; ++i)
    for (long j = 1; j <= cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : d_)
    if (x != 0) return false;
  return true;
}

long QMatrix::rank() const {
  QMatrix m = *this;
  long rank = 0;
  long row = 1;
  for (long col = 1; col <= cols_ && row <= rows_; ++col) {
    long piv = 0;
    for (long i = row; i <= rows_; ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (!piv) continue;
    if (piv != row)
      for (long j = col; j <= cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    const Rational p = m.at(row, col);
    for (long i = row + 1; i <= rows_; ++i) {
      const Rational f = m.at(i, col);
      if (f == 0) continue;
      const Rational scale = f / p;
      for (long j = col; j <= cols_; ++j) m.at(i, j) -= scale * m.at(row, j);
    }
    ++rank;
    ++row;
  }
  return rank;
}

Rational QMatrix::trace() const {
  if (rows_ != cols_) throw SizeMismatch("trace of non-square matrix");
  Rational t = 0;
  for (long i = 1; i <= rows_; ++i) t += at(i, i);
  return t;
}

std::string QMatrix::str() const {
  std::string s;
  for (long i = 1; i <= rows_; ++i) {
    s += "[";
    for (long j = 1; j <= cols_; ++j) {
      if (j > 1) s += ", ";
      s += rational_str(at(i, j));
    }
    s += "]\n";
  }
  return s;
}

std::optional<QVec> solve_square(QMatrix A, QVec b) {
  long n = A.rows();
  if (A.cols() != n || static_cast<long>(b.size()) != n)
    throw SizeMismatch("solve_square shape");
  for (long col = 1; col <= n; ++col) {
    long piv = 0;
    for (long i = col; i <= n; ++i)
      if (A.at(i, col) != 0) { piv = i; break; }
    if (!piv) return std::nullopt;
    if (piv != col) {
      for (long j = 1; j <= n; ++j) std::swap(A.at(piv, j), A.at(col, j));
      std::swap(b[piv - 1], b[col - 1]);
    }
    const Rational p = A.at(col, col);
    for (long i = 1; i <= n; ++i) {
      if (i == col) continue;
      const Rational f = A.at(i, col);
      if (f == 0) continue;
      const Rational scale = f / p;
      for (long j = col; j <= n; ++j) A.at(i, j) -= scale * A.at(col, j);
      b[i - 1] -= scale * b[col - 1];
    }
  }
  QVec x(n);
  for (long i = 1; i <= n; ++i) x[i - 1] = b[i - 1] / A.at(i, i);
  return x;
}

long Rref::reduce(QVec& v) const {
  for (const auto& [pcol, row] : rows_) {
    const Rational& c = v[pcol];
    if (c == 0) continue;
    const Rational f = c;  // rows are normalized with pivot 1
    for (long j = pcol; j < ncols_; ++j) {
      if (row[j] == 0) continue;
      v[j] -= f * row[j];
    }
  }
  for (long j = 0; j < ncols_; ++j)
    if (v[j] != 0) return j;
  return -1;
}

bool Rref::add(QVec v) {
  long pcol = reduce(v);
  if (pcol < 0) return false;
  const Rational p = v[pcol];
  for (long j = pcol; j < ncols_; ++j)
    if (v[j] != 0) v[j] /= p;
  // Back-substitute into existing rows so reduction stays single-pass.
  for (auto& [c, row] : rows_) {
    const Rational& f = row[pcol];
    if (f == 0) continue;
    const Rational scale = f;
    for (long j = pcol; j < ncols_; ++j) {
      if (v[j] == 0) continue;
      row[j] -= scale * v[j];
    }
  }
  auto it = std::lower_bound(
      rows_.begin(), rows_.end(), pcol,
      [](const auto& r, long c) { return r.first < c; });
  rows_.insert(it, {pcol, std::move(v)});
  return true;
}

bool Rref::has_pivot(long col) const {
  auto it = std::lower_bound(
      rows_.begin(), rows_.end(), col,
      [](const auto& r, long c) { return r.first < c; });
  return it != rows_.end() && it->first == col;
}

}  // namespace mvwb
