#include "mvwb/combinatorics.hpp"

#include <algorithm>

#include "mvwb/errors.hpp"
#include "mvwb/linalg.hpp"

namespace mvwb {

ParameterSet::ParameterSet(int n_, std::vector<Multiset> R_)
    : n(n_), R(std::move(R_)) {
  if (n < 2) throw BadDimensions("rank must be >= 2");
  if (static_cast<int>(R.size()) != n - 1)
    throw BadDimensions("parameter set needs n-1 multisets");
}

const Multiset& ParameterSet::at(int i) const {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("parameter node");
  return R[i - 1];
}

std::vector<long> ParameterSet::weight() const {
  std::vector<long> w(n - 1);
  for (int i = 1; i <= n - 1; ++i) w[i - 1] = at(i).size();
  return w;
}

long SliceCombinatorics::mprime(int i) const {
  if (i == 0) return 0;
  if (i < 1 || i > n - 1) throw IndexOutOfRange("m' index");
  return mp[i - 1];
}

Partition SliceCombinatorics::pi_partition() const { return Partition(p); }

std::string SliceCombinatorics::str() const {
  auto vec = [](const std::vector<long>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  return "n=" + std::to_string(n) + " lambda=" + vec(lambda) +
         " mu=" + vec(mu) + " N=" + std::to_string(N) + " m=" + vec(m) +
         " m'=" + vec(mp) + " m''=" + vec(mpp) + " pi=" + vec(p) +
         " tau=" + tau.str();
}

// Solve the Cartan system 2c_j - c_{j-1} - c_{j+1} = d_j (type A_{n-1},
// c_0 = c_n = 0) exactly; the coweight difference expands in simple coroots
// with these coefficients.
static std::vector<Rational> cartan_solve(const std::vector<Rational>& d) {
  long k = static_cast<long>(d.size());
  QMatrix A(k, k);
  QVec b(k);
  for (long j = 1; j <= k; ++j) {
    A.at(j, j) = 2;
    if (j > 1) A.at(j, j - 1) = -1;
    if (j < k) A.at(j, j + 1) = -1;
    b[j - 1] = d[j - 1];
  }
  auto x = solve_square(A, b);
  if (!x) throw Error("Cartan matrix is singular");  // cannot happen
  return *x;
}

// Coefficients c with sum_j d_j w_j = sum_j c_j alpha_j, then re-indexed to
// m_i = c_{n-i}. Throws NotDominated unless all c_j are nonnegative integers.
static std::vector<long> coroot_coefficients(int n,
                                             const std::vector<Rational>& d,
                                             const char* what) {
  auto c = cartan_solve(d);
  std::vector<long> m(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const Rational& cj = c[(n - i) - 1];
    if (!is_integer(cj) || cj < 0)
      throw NotDominated(std::string(what) + " is not a nonnegative integer " +
                         "combination of simple coroots");
    m[i - 1] = rational_to_long(cj);
  }
  return m;
}

SliceCombinatorics derive_slice_combinatorics(int n,
                                              const std::vector<long>& lambda,
                                              const std::vector<long>& mu) {
  if (n < 2) throw BadDimensions("rank must be >= 2");
  if (static_cast<int>(lambda.size()) != n - 1 ||
      static_cast<int>(mu.size()) != n - 1)
    throw BadDimensions("lambda and mu must have length n-1");
  for (long x : lambda)
    if (x < 0) throw NotDominated("lambda must be dominant");
  for (long x : mu)
    if (x < 0) throw NotDominated("mu must be dominant");

  SliceCombinatorics sc;
  sc.n = n;
  sc.lambda = lambda;
  sc.mu = mu;
  sc.N = 0;
  for (int i = 1; i <= n - 1; ++i) sc.N += (n - i) * lambda[i - 1];

  // d_j = coefficient on w_j of the difference, j = 1..n-1.
  std::vector<Rational> d(n - 1), dp(n - 1);
  for (int j = 1; j <= n - 1; ++j) {
    d[j - 1] = Rational(lambda[(n - j) - 1] - mu[(n - j) - 1]);
    dp[j - 1] = Rational((j == 1 ? sc.N : 0) - mu[(n - j) - 1]);
  }
  sc.m = coroot_coefficients(n, d, "lambda - mu");
  sc.mp = coroot_coefficients(n, dp, "N*w_1 - mu");

  sc.mpp.resize(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    sc.mpp[i - 1] = sc.mp[i - 1] - sc.m[i - 1];
    if (sc.mpp[i - 1] < 0) throw NotDominated("m'' must be nonnegative");
  }
  if (sc.mpp[0] != 0) throw Error("m''_1 != 0; derivation bug");

  sc.p.resize(n);
  for (int i = 1; i <= n - 1; ++i) sc.p[i - 1] = sc.mprime(i) - sc.mprime(i - 1);
  sc.p[n - 1] = sc.N - sc.mprime(n - 1);
  for (int i = 0; i < n; ++i) {
    if (sc.p[i] < 0) throw NotDominated("pi has a negative part");
    if (i && sc.p[i] < sc.p[i - 1]) throw NotDominated("pi not non-decreasing");
  }

  // tau = (1^{lambda_{n-1}} 2^{lambda_{n-2}} ... (n-1)^{lambda_1})^t.
  std::vector<long> expo;
  for (int j = 1; j <= n - 1; ++j)
    for (long k = 0; k < lambda[(n - j) - 1]; ++k) expo.push_back(j);
  sc.tau = partition_transpose(Partition(expo));

  if (!dominance_leq(sc.pi_partition(), sc.tau))
    throw Error("pi not dominated by tau; derivation bug");
  return sc;
}

std::vector<long> lambda_first_fundamental(int n, long N) {
  std::vector<long> lambda(n - 1, 0);
  lambda[n - 2] = N;
  return lambda;
}

SliceCombinatorics combinatorics_from_pi(
    const std::vector<long>& p_ascending) {
  int n = static_cast<int>(p_ascending.size());
  if (n < 2) throw BadDimensions("pi needs at least two parts");
  long N = 0;
  for (long x : p_ascending) N += x;
  std::vector<long> mu(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    mu[i - 1] = p_ascending[i] - p_ascending[i - 1];
    if (mu[i - 1] < 0) throw NotDominated("pi must be non-decreasing");
  }
  return derive_slice_combinatorics(n, lambda_first_fundamental(n, N), mu);
}

Multiset c_block(int n, int i, const Rational& c) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("c_block node");
  Multiset out;
  for (int k = 0; k < n - i; ++k) out.add(c + (n - i - 1) - 2 * k);
  return out;
}

Multiset expand_parameters(const ParameterSet& R) {
  Multiset out;
  for (int i = 1; i <= R.n - 1; ++i)
    for (const auto& [v, m] : R.at(i).runs())
      for (long k = 0; k < m; ++k) out = out.united(c_block(R.n, i, v));
  return out;
}

std::vector<PolyU> shift_polynomials_f(const ParameterSet& R) {
  int n = R.n;
  std::vector<PolyU> f;
  f.reserve(n - 1);
  for (int k = 1; k <= n - 1; ++k) {
    // f_k(u) = prod_{i<k} prod_{s=0}^{k-i-1} R_i(u + 1/2 + (k-i-1)/2 - s).
    PolyU fk = PolyU::constant(1);
    for (int i = 1; i < k; ++i) {
      PolyU Ri = PolyU::from_parameters(R.at(i));
      for (int s = 0; s <= k - i - 1; ++s) {
        Rational shift = Rational(1, 2) + Rational(k - i - 1, 2) - s;
        fk = fk * Ri.shift_arg(shift);
      }
    }
    f.push_back(fk);
  }
  return f;
}

ParameterSet parameter_set_from_rtilde(int n, const Multiset& rtilde) {
  std::vector<Multiset> R(n - 1);
  R[n - 2] = rtilde;
  return ParameterSet(n, std::move(R));
}

}  // namespace mvwb
