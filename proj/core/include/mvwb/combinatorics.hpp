#pragma once

#include <string>
#include <vector>

#include "mvwb/multiset.hpp"
#include "mvwb/partition.hpp"
#include "mvwb/poly.hpp"

namespace mvwb {

// Per-node multisets R_1..R_{n-1}; the weight lambda is |R_i| per node.
struct ParameterSet {
  int n = 2;
  std::vector<Multiset> R;  // size n-1, R[i-1] is the node-i multiset

  ParameterSet() = default;
  ParameterSet(int n_, std::vector<Multiset> R_);

  const Multiset& at(int i) const;     // 1-based node index
  std::vector<long> weight() const;    // lambda_i = |R_i|
};

// The full lambda/mu dictionary for one slice instance. Vectors are indexed
// so that entry i (1-based) is the coefficient on the (n-i)-th fundamental
// coweight, matching the generating-series node index everywhere.
struct SliceCombinatorics {
  int n = 2;
  std::vector<long> lambda, mu;  // length n-1
  long N = 0;
  std::vector<long> m, mp, mpp;  // m, m', m'' (length n-1)
  std::vector<long> p;           // length n, 0 <= p_1 <= ... <= p_n
  Partition tau;

  long mprime(int i) const;          // m'_i with m'_0 = 0
  Partition pi_partition() const;    // zero parts stripped
  long max_p() const { return p.empty() ? 0 : p.back(); }
  // Default series order for identity checks on this instance.
  long default_order() const { return std::max(2 * N + 5, 20L); }
  std::string str() const;
};

// Derives N, m, m', m'', tau, pi from (n, lambda, mu).
// Throws BadDimensions on length mismatch, NotDominated when lambda - mu is
// not a nonnegative integer combination of simple coroots (or inputs are not
// dominant).
SliceCombinatorics derive_slice_combinatorics(int n,
                                              const std::vector<long>& lambda,
                                              const std::vector<long>& mu);

// Lambda vector for N * (first fundamental coweight) at rank n.
std::vector<long> lambda_first_fundamental(int n, long N);

// Convenience: the instance with lambda = N*w_1 determined by pi given as
// its non-decreasing parts (mu_i = p_{i+1} - p_i).
SliceCombinatorics combinatorics_from_pi(const std::vector<long>& p_ascending);

// {c + n-i-1, c + n-i-3, ..., c - n+i+1}, size n-i.
Multiset c_block(int n, int i, const Rational& c);

// R~ = union over i, c in R_i of the c-blocks; size equals N.
Multiset expand_parameters(const ParameterSet& R);

// The monic shift polynomials f_1..f_{n-1};
// f_k(u - 1/2) = prod_{i<k} R_i(u + (k-i-1)/2) ... R_i(u - (k-i-1)/2),
// with R_i(u) = prod_{c in R_i} (u - c/2). f_1 = 1.
std::vector<PolyU> shift_polynomials_f(const ParameterSet& R);

// ParameterSet of weight N*w_1 holding the multiset at node n-1.
ParameterSet parameter_set_from_rtilde(int n, const Multiset& rtilde);

}  // namespace mvwb
