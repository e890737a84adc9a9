#pragma once

#include <string>
#include <vector>

#include "mvwb/combinatorics.hpp"
#include "mvwb/ratfun.hpp"
#include "mvwb/series.hpp"
#include "mvwb/slice_point.hpp"
#include "mvwb/tableau.hpp"

namespace mvwb {

// Classical-limit sign identities: A_i^(r)(g) = (-1)^r Q_i^(r)(X) and
// E_i^(r)(g) = (-1)^r E_i^(r)(X), where the right-hand sides come from the
// Gauss decomposition of g(-u)^T and Q_i = D_1 ... D_i. Works on any
// shape-valid point (no determinant constraint).
CheckReport verify_classical_AE(const SlicePoint& g, long order);

// Gauss diagonal versus principal minors: prod_{j<=i} D_j = Delta_{1..i,1..i}
// to the truncation order, every i.
CheckReport verify_gauss_minor(const SeriesMatrix& M, long order);

// Same over rational-function entries (exact), plus the shifted form
// D_i(u) = Q_i(u+i-1)/Q_{i-1}(u+i-1) with Q_i(u) = prod_j D_j(u-j+1).
struct RfMatrix {
  long dim;
  std::vector<RationalFunctionU> e;  // row-major
  RationalFunctionU& at(long i, long j) { return e[(i - 1) * dim + (j - 1)]; }
  const RationalFunctionU& at(long i, long j) const {
    return e[(i - 1) * dim + (j - 1)];
  }
};
CheckReport verify_gauss_minor_rf(const RfMatrix& M);

// The s_i ledger at lambda = N*w_1: builds s_i from the instance, the
// r-series from R~, and asserts the two defining identities as exact
// rational-function equalities (the order is recorded with the report).
CheckReport verify_s_identities(int n, const std::vector<long>& mu,
                                const Multiset& rtilde, long order);

// The f-polynomial ledger: R_{n-1}(u) = R~(u) f_{n-2}(u-1/2) /
// (f_{n-1}(u) f_{n-1}(u-1)) and R_i(u) = f_{i-1}(u-1/2) f_{i+1}(u-1/2) /
// (f_i(u) f_i(u-1)), checked exactly; degrees f_k = m''_k.
CheckReport verify_f_identities(const ParameterSet& R);

// eval_A(g, i, r) = 0 for m'_i < r <= m'_i + 5.
CheckReport verify_truncation_vanishing(const SlicePoint& g);

// Suite drivers shared by the CLI and the acceptance tests. Seeds index the
// samples deterministically.
std::vector<CheckReport> run_suite_mv(const SliceCombinatorics& comb,
                                      long samples, unsigned long seed);
std::vector<CheckReport> run_suite_classical(const SliceCombinatorics& comb,
                                             long samples, unsigned long seed,
                                             long order);
std::vector<CheckReport> run_suite_series(int n, long samples,
                                          unsigned long seed);
std::vector<CheckReport> run_suite_crystal(const ParameterSet& R,
                                           const std::vector<long>& mu,
                                           long order);

}  // namespace mvwb
