#pragma once

#include <map>
#include <vector>

#include "mvwb/combinatorics.hpp"
#include "mvwb/laurent.hpp"
#include "mvwb/rational.hpp"

namespace mvwb {

// Matrix coordinates on a slice chart: g = (a_ij(t)) with
//   a_ij = delta_ij + a_ij^(1) t^-1 + ... ,
//   a_ij^(r) = 0 unless max(1, p_j - p_i + 1) <= r <= p_j.
struct SlicePoint {
  SliceCombinatorics comb;
  // coefficient maps r -> value, (n x n), 1-based through coeff()/set().
  std::vector<std::map<long, Rational>> a;

  explicit SlicePoint(SliceCombinatorics c);

  Rational coeff(int i, int j, long r) const;
  void set(int i, int j, long r, const Rational& v);  // erases zeros

  bool operator==(const SlicePoint& o) const;
};

struct ValidationReport {
  bool shape_ok = false;
  bool det_is_one = false;
};

// r-range with nonzero coefficients allowed at entry (i, j); empty when
// rmax < rmin.
std::pair<long, long> allowed_r_range(const SliceCombinatorics& comb, int i,
                                      int j);

bool shape_ok(const SlicePoint& g);
ValidationReport validate_point(const SlicePoint& g);

// g as an exact matrix of Laurent polynomials in t.
LaurentMatrix point_matrix(const SlicePoint& g);

// Column generators of the lattice: column j is a_{.j}(t) * t^{p_j}, a
// polynomial vector.
struct LatticeGens {
  int n = 0;
  std::vector<std::vector<LaurentPoly>> cols;  // cols[j][i], 0-based
};

LatticeGens point_to_lattice(const SlicePoint& g);  // ShapeViolation

// Unique slice-chart representative of the lattice spanned by the columns.
// Works over series truncated at t-order N + max(p) + 4. Throws NotInSlice
// when the span has the wrong colength or cannot be brought to chart shape.
SlicePoint canonicalize_lattice(const LatticeGens& L,
                                const SliceCombinatorics& comb);

// Coefficient functions of the chart. A_i^(r) is exact (coefficient of t^-r
// in the principal i x i minor); E/F expand a minor ratio to the given
// order and throw OrderTooLarge if r exceeds it.
Rational eval_A(const SlicePoint& g, int i, long r);
Rational eval_E(const SlicePoint& g, int i, long r, long order = -1);
Rational eval_F(const SlicePoint& g, int i, long s, long order = -1);

enum class SampleFamily { Upper, Lower, ReducedProduct, Free };

// Deterministic sampling: identical (comb, seed, family) yield identical
// points. Upper/Lower/ReducedProduct produce det = 1 points; Free fills
// every allowed coefficient (no determinant constraint).
SlicePoint sample_point(const SliceCombinatorics& comb, unsigned long seed,
                        SampleFamily family);

}  // namespace mvwb
