#pragma once

#include <string>
#include <vector>

#include "mvwb/combinatorics.hpp"
#include "mvwb/monomial.hpp"
#include "mvwb/multiset.hpp"
#include "mvwb/ratfun.hpp"

namespace mvwb {

// Filling of shape pi (non-decreasing, zero rows allowed) by a multiset
// alphabet; rows are internally unordered.
struct RowTableau {
  std::vector<long> shape;     // length n
  std::vector<Multiset> rows;  // |rows[i]| == shape[i]

  Multiset entries() const;
  bool operator==(const RowTableau& o) const {
    return shape == o.shape && rows == o.rows;
  }
  bool operator<(const RowTableau& o) const;
  std::string str() const;
};

// tableau_from_flags: T_i = (S_i + (n-i+1)) \ (S_{i-1} + (n-i+2)) for
// i = 1..n-1 and T_n = R~ \ (S_{n-1} + 2). Throws NotAFlag when the flag
// condition fails, AlphabetMismatch on impossible differences.
RowTableau tableau_from_flags(const std::vector<Multiset>& S,
                              const Multiset& rtilde,
                              const SliceCombinatorics& comb);

// Inverse: S_i = (T_1 u ... u T_i) - (n-i+1).
std::vector<Multiset> flags_from_tableau(const RowTableau& T,
                                         const SliceCombinatorics& comb);

// D_i(v) = prod_{t in T_i} (v + i - 1 + t/2 - n/2) / v^{p_i}.
std::vector<RationalFunctionU> tableau_D_ratfun(const RowTableau& T,
                                                const SliceCombinatorics& comb);
std::vector<SeriesU> tableau_D_series(const RowTableau& T,
                                      const SliceCombinatorics& comb,
                                      long order);

// One-line permutation on {1..N}.
using Permutation = std::vector<int>;

// Parabolic-singular permutations: w with l(s w) < l(w) for every simple
// reflection s in W_pi and l(w s) > l(w) for every s in W_tau (consecutive
// blocks in the given part order). Brute force; TooLarge for N > 9.
std::vector<Permutation> enumerate_ps(const std::vector<long>& pi,
                                      const std::vector<long>& tau);

// Reference alphabet tuple: c-blocks of R listed by ascending parameter
// value (larger block first on ties), each block descending.
std::vector<Rational> reference_tuple(const ParameterSet& R);

// T_w: fill shape pi row by row with the reading word x o w for the
// reference tuple x.
RowTableau ps_to_tableau(const Permutation& w, const ParameterSet& R,
                         const SliceCombinatorics& comb);

// Witness that T decomposes into c-blocks placed in strictly descending
// rows; one block per parameter with multiplicity.
struct RColoring {
  struct Block {
    int i;
    Rational c;
    std::vector<long> rows;  // strictly increasing row indices, one per value
  };
  std::vector<Block> blocks;
};

RColoring overshadowing_check(const RowTableau& T, const ParameterSet& R);

// All row-symmetrized fillings of shape pi by the alphabet.
std::vector<RowTableau> enumerate_row_tableaux(const std::vector<long>& shape,
                                               const Multiset& alphabet);

struct CheckFailure {
  std::string location, lhs, rhs;
};

struct CheckReport {
  std::string check;
  long instances = 0;
  std::vector<CheckFailure> failures;
  bool pass() const { return failures.empty(); }
  void count(bool ok, const std::string& location, const std::string& lhs,
             const std::string& rhs);
};

// Master highest-weight cross-check for one member p of the weight-mu*
// crystal over R~: the monomial J-series must match the phi-transformed
// tableau D-series, and the A-series must match s_i * Q_i eigenvalues.
CheckReport cross_check_highest_weight(const Monomial& p,
                                       const SliceCombinatorics& comb,
                                       const Multiset& rtilde, long order);

// Set equality between the crystal image of B(R)_{mu*} under the flag/tableau
// dictionary and the overshadowing subset of Row_pi(R~); also compares the
// count with |PS(pi, kappa)| for the c-block composition kappa when the
// parameters are generic (distinct alphabet).
CheckReport verify_overshadowing_bijection(const ParameterSet& R,
                                           const std::vector<long>& mu);

}  // namespace mvwb
