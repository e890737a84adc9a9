#pragma once

#include <optional>
#include <vector>

#include "mvwb/rational.hpp"

namespace mvwb {

using QVec = std::vector<Rational>;

// Dense matrix over Rational.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), d_(rows * cols, Rational(0)) {}
  static QMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Rational& at(long i, long j);              // 1-based
  const Rational& at(long i, long j) const;  // 1-based

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const Rational& s) const;
  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  QMatrix pow(long k) const;
  QMatrix transpose() const;
  bool is_zero() const;
  long rank() const;
  Rational trace() const;

  std::string str() const;

 private:
  long rows_, cols_;
  std::vector<Rational> d_;
};

// Solve A x = b for square A; nullopt if A is singular.
std::optional<QVec> solve_square(QMatrix A, QVec b);

// Incremental reduced row echelon form over Q with a fixed coordinate
// priority: pivots are chosen greedily on the smallest coordinate index.
// Rows are stored dense; zero entries are skipped during reduction.
class Rref {
 public:
  explicit Rref(long ncols) : ncols_(ncols) {}

  // Reduce v against the current rows in place; returns the pivot column
  // (smallest index with nonzero entry) or -1 if v reduced to zero.
  long reduce(QVec& v) const;

  // Reduce and, if nonzero remains, normalize and insert as a new row.
  // Returns true if the row enlarged the span.
  bool add(QVec v);

  long pivot_count() const { return static_cast<long>(rows_.size()); }
  bool has_pivot(long col) const;
  const std::vector<std::pair<long, QVec>>& rows() const { return rows_; }

  // Membership: v lies in the row span.
  bool contains(QVec v) const { return reduce(v) < 0; }

 private:
  long ncols_;
  std::vector<std::pair<long, QVec>> rows_;  // (pivot column, row), sorted
};

}  // namespace mvwb
