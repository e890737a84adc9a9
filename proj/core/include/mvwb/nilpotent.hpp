#pragma once

#include <vector>

#include "mvwb/linalg.hpp"
#include "mvwb/partition.hpp"
#include "mvwb/slice_point.hpp"

namespace mvwb {

// Right-justified pyramid for pi = (p_1 <= ... <= p_n), boxes numbered right
// to left, top to bottom. Box (i, k) is the k-th box of row i counted from
// the right, k = 1..p_i.
struct Pyramid {
  std::vector<long> p;  // non-decreasing, zero rows allowed
  long N = 0;

  explicit Pyramid(std::vector<long> parts);

  long rows() const { return static_cast<long>(p.size()); }
  long row_offset(long i) const;      // boxes before row i
  long box(long i, long k) const;     // global number, 1-based
  long row_of_box(long b) const;
  long col_of_box(long b) const;      // columns numbered left to right
};

// N x N rational matrix in the transverse-slice block form: block (i, j) has
// size p_i x p_j, diagonal blocks carry 1s on the subdiagonal, and free
// entries sit only in final block columns, in rows 1..min(p_i, p_j).
struct SliceMatrix {
  std::vector<long> p;
  QMatrix X;

  SliceMatrix(std::vector<long> p_, QMatrix X_);
  long N() const { return X.rows(); }
};

bool slice_shape_ok(const SliceMatrix& X);

// The nilpotent e_pi read off the pyramid (sum of adjacent-box matrix units).
SliceMatrix pyramid_nilpotent(const std::vector<long>& p);

// Explicit block formula: final column of block (i, j) holds
// -a_ij^(p_j - k + 1) in row k for the allowed coefficient indices.
SliceMatrix mv_map(const SlicePoint& g);  // ShapeViolation

// Independent construction: the matrix of multiplication by t on
// Lambda_0 / Lambda in the pyramid basis, by exact reduction against the
// lattice generators. Requires det = 1 (NotABasis otherwise).
SliceMatrix mv_map_oracle(const SlicePoint& g);

// Inverse of mv_map on nilpotent slice-shaped matrices: read the chart
// coefficients off the final block columns. Throws ShapeViolation /
// NotNilpotent.
SlicePoint mv_inverse(const SliceMatrix& X);

// Jordan type of a nilpotent matrix from the rank sequence of its powers.
Partition jordan_type(const QMatrix& X);  // NotNilpotent

bool orbit_leq_check(const QMatrix& X, const Partition& tau);

}  // namespace mvwb
