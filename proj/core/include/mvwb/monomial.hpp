#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mvwb/combinatorics.hpp"
#include "mvwb/multiset.hpp"
#include "mvwb/partition.hpp"
#include "mvwb/ratfun.hpp"
#include "mvwb/series.hpp"

namespace mvwb {

// Laurent monomial in the variables y_{i,k}, i a node, k rational.
class Monomial {
 public:
  using Key = std::pair<int, Rational>;  // (node, position)

  Monomial() = default;
  static Monomial y(int i, const Rational& k, long e = 1);

  long exponent(int i, const Rational& k) const;
  const std::map<Key, long>& factors() const { return e_; }
  bool is_one() const { return e_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(long k) const;
  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

  // Coefficients on the fundamental coweights, per node 1..n-1.
  std::vector<long> weight(int n) const;

  std::string str() const;

 private:
  std::map<Key, long> e_;
  void add(int i, const Rational& k, long e);
  friend Monomial z_monomial(int n, int i, const Rational& k);
};

// z_{i,k} = y_{i,k} y_{i,k+2} / prod_{j~i} y_{j,k+1}.
Monomial z_monomial(int n, int i, const Rational& k);

std::vector<long> monomial_weight(const Monomial& p, int n);

// Unique tuple S with p = y_R * prod_{i, k in S_i} z_{i,k}^{-1};
// NotFactorizable when no such tuple of multisets exists.
std::vector<Multiset> z_factorize(const Monomial& p, const ParameterSet& R);

// y_{xi,c} = y_{i,c} * prod_{(a,b) in xi} z_{i-a+b, c-a-b}^{-1}, cells read
// as (row, column). BoxViolation unless xi fits the i x (n-i) box.
Monomial fundamental_element(int n, int i, const Rational& c,
                             const Partition& xi);

// One partition per parameter (with multiplicity), box-bounded.
struct PartitionAssignment {
  struct Entry {
    int i;
    Rational c;
    Partition xi;
  };
  std::vector<Entry> entries;

  Monomial product(int n) const;
};

// Backtracking witness that p lies in the product monomial crystal of R;
// first witness in lexicographic order. Throws NotMember.
PartitionAssignment crystal_membership(const Monomial& p,
                                       const ParameterSet& R);

struct CrystalElement {
  Monomial monomial;
  PartitionAssignment witness;
};

// All elements of weight mu* (coefficients mu_i on node i), deduplicated as
// monomials, sorted by monomial encoding. The witness kept per monomial is
// the lexicographically first one.
std::vector<CrystalElement> enumerate_weight_space(const ParameterSet& R,
                                                   const std::vector<long>& mu);

// All elements regardless of weight (used for fundamental-crystal counts).
std::vector<CrystalElement> enumerate_crystal(const ParameterSet& R);

struct EmbeddedElement {
  Monomial monomial;               // equal to the input monomial
  PartitionAssignment witness;     // over the expanded parameters
};

// Rewrites a membership witness over R into one over R~ (columns at node
// n-1 along each c-block); the underlying monomial is unchanged and the
// rewritten witness is re-verified.
EmbeddedElement embed_crystal(const Monomial& p,
                              const PartitionAssignment& witness,
                              const ParameterSet& R);

enum class FlagShiftConvention { ShiftTwo, ShiftOne };

// Highest-weight flag condition on S over R~: sizes |S_i| = m'_i and
// S_i + (n-i+1) contained in S_{i+1} + (n-i), with S_{n-1} + 2 in R~ (the
// adopted convention; ShiftOne keeps the final inclusion at +1 for audit).
bool flag_check(const std::vector<Multiset>& S, const Multiset& rtilde,
                const std::vector<long>& mu,
                FlagShiftConvention conv = FlagShiftConvention::ShiftTwo);

// J_i(u) = u^{-mu_i} prod_k (u - k/2)^{a_{i,k}} as a rational function.
std::vector<RationalFunctionU> hw_ratfun_J(const Monomial& p,
                                           const std::vector<long>& mu, int n);
std::vector<SeriesU> hw_series_J(const Monomial& p,
                                 const std::vector<long>& mu, int n,
                                 long order);

// A_i(u) = prod_{k in S_i} (1 - k/2 u^-1).
std::vector<RationalFunctionU> hw_ratfun_A(const std::vector<Multiset>& S);
std::vector<SeriesU> hw_series_A(const std::vector<Multiset>& S, long order);

}  // namespace mvwb
