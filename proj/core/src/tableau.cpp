#include "mvwb/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "mvwb/errors.hpp"

namespace mvwb {

Multiset RowTableau::entries() const {
  Multiset all;
  for (const auto& r : rows) all = all.united(r);
  return all;
}

bool RowTableau::operator<(const RowTableau& o) const {
  if (shape != o.shape) return shape < o.shape;
  return rows < o.rows;
}

std::string RowTableau::str() const {
  std::string s;
  for (const auto& r : rows) {
    s += r.str();
    s += " ";
  }
  return s;
}

RowTableau tableau_from_flags(const std::vector<Multiset>& S,
                              const Multiset& rtilde,
                              const SliceCombinatorics& comb) {
  int n = comb.n;
  if (static_cast<int>(S.size()) != n - 1)
    throw AlphabetMismatch("flag tuple length");
  if (!flag_check(S, rtilde, comb.mu)) throw NotAFlag("flag condition fails");
  RowTableau T;
  T.shape = comb.p;
  T.rows.resize(n);
  Multiset prev;  // S_{i-1} + (n-i+2)
  for (int i = 1; i <= n - 1; ++i) {
    Multiset cur = S[i - 1].shifted(n - i + 1);
    T.rows[i - 1] = cur.minus(prev);
    if (T.rows[i - 1].size() != comb.p[i - 1])
      throw AlphabetMismatch("row size != p_i");
    prev = cur;
  }
  T.rows[n - 1] = rtilde.minus(prev);
  if (T.rows[n - 1].size() != comb.p[n - 1])
    throw AlphabetMismatch("last row size != p_n");
  return T;
}

std::vector<Multiset> flags_from_tableau(const RowTableau& T,
                                         const SliceCombinatorics& comb) {
  int n = comb.n;
  if (static_cast<int>(T.rows.size()) != n)
    throw AlphabetMismatch("tableau row count");
  std::vector<Multiset> S(n - 1);
  Multiset acc;
  for (int i = 1; i <= n - 1; ++i) {
    acc = acc.united(T.rows[i - 1]);
    S[i - 1] = acc.shifted(-(n - i + 1));
  }
  return S;
}

std::vector<RationalFunctionU> tableau_D_ratfun(
    const RowTableau& T, const SliceCombinatorics& comb) {
  int n = comb.n;
  std::vector<RationalFunctionU> D;
  for (int i = 1; i <= n; ++i) {
    PolyU num = PolyU::constant(1);
    for (const auto& t : T.rows[i - 1].values()) {
      Rational c = Rational(i - 1) + t / 2 - Rational(n, 2);
      num = num * PolyU({c, Rational(1)});
    }
    D.push_back(RationalFunctionU(num, PolyU::monomial(comb.p[i - 1])));
  }
  return D;
}

std::vector<SeriesU> tableau_D_series(const RowTableau& T,
                                      const SliceCombinatorics& comb,
                                      long order) {
  auto D = tableau_D_ratfun(T, comb);
  std::vector<SeriesU> out;
  for (const auto& f : D) out.push_back(f.expand(order));
  return out;
}

namespace {

// Consecutive blocks of {1..N} cut by the given part sizes.
std::vector<long> block_of_position(const std::vector<long>& parts, long N) {
  std::vector<long> blk(N + 1, 0);
  long pos = 1, b = 0;
  for (long part : parts) {
    ++b;
    for (long k = 0; k < part; ++k) {
      if (pos > N) throw SizeMismatch("parts exceed N");
      blk[pos++] = b;
    }
  }
  if (pos != N + 1) throw SizeMismatch("parts do not fill N");
  return blk;
}

}  // namespace

std::vector<Permutation> enumerate_ps(const std::vector<long>& pi,
                                      const std::vector<long>& tau) {
  long N = std::accumulate(pi.begin(), pi.end(), 0L);
  if (std::accumulate(tau.begin(), tau.end(), 0L) != N)
    throw SizeMismatch("pi and tau totals differ");
  if (N > 9) throw TooLarge("PS enumeration limited to N <= 9");
  auto piblk = block_of_position(pi, N);
  auto taublk = block_of_position(tau, N);
  std::vector<Permutation> out;
  Permutation w(N);
  std::iota(w.begin(), w.end(), 1);
  do {
    Permutation winv(N + 1);
    for (long k = 1; k <= N; ++k) winv[w[k - 1]] = static_cast<int>(k);
    bool ok = true;
    // Longest in its left W_pi-coset: w^-1 strictly falls inside pi-blocks.
    for (long a = 1; ok && a < N; ++a)
      if (piblk[a] == piblk[a + 1] && winv[a] < winv[a + 1]) ok = false;
    // Shortest in its right W_tau-coset: w strictly rises inside tau-blocks.
    for (long a = 1; ok && a < N; ++a)
      if (taublk[a] == taublk[a + 1] && w[a - 1] > w[a]) ok = false;
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Rational> reference_tuple(const ParameterSet& R) {
  // Blocks sorted by (value, larger block first, node); values descend
  // inside each block.
  std::vector<std::tuple<Rational, int, int>> blocks;  // (c, -(n-i), i)
  for (int i = 1; i <= R.n - 1; ++i)
    for (const auto& [c, m] : R.at(i).runs())
      for (long k = 0; k < m; ++k) blocks.emplace_back(c, -(R.n - i), i);
  std::sort(blocks.begin(), blocks.end());
  std::vector<Rational> x;
  for (const auto& [c, negsize, i] : blocks)
    for (const auto& v : c_block(R.n, i, c).values())
      x.push_back(v);  // values() ascends; reverse below per block
  // c_block values ascend; the reference lists each block descending.
  std::vector<Rational> out;
  size_t pos = 0;
  for (const auto& [c, negsize, i] : blocks) {
    size_t len = static_cast<size_t>(-negsize);
    for (size_t k = 0; k < len; ++k) out.push_back(x[pos + len - 1 - k]);
    pos += len;
  }
  return out;
}

RowTableau ps_to_tableau(const Permutation& w, const ParameterSet& R,
                         const SliceCombinatorics& comb) {
  std::vector<Rational> x = reference_tuple(R);
  long N = static_cast<long>(x.size());
  if (static_cast<long>(w.size()) != N)
    throw SizeMismatch("permutation size != N");
  RowTableau T;
  T.shape = comb.p;
  T.rows.resize(comb.n);
  long pos = 0;
  for (int i = 1; i <= comb.n; ++i) {
    Multiset row;
    for (long k = 0; k < comb.p[i - 1]; ++k, ++pos)
      row.add(x[w[pos] - 1]);
    T.rows[i - 1] = row;
  }
  return T;
}

namespace {

struct BlockSpec {
  int i;
  Rational c;
  std::vector<Rational> values;  // descending
};

bool color_search(const std::vector<BlockSpec>& blocks, size_t idx,
                  std::vector<Multiset>& rows, RColoring& witness) {
  if (idx == blocks.size()) return true;
  const auto& blk = blocks[idx];
  long nrows = static_cast<long>(rows.size());
  long need = static_cast<long>(blk.values.size());
  // Choose strictly increasing rows r_1 < ... < r_need with value q in row
  // r_q; DFS in lexicographic row order.
  std::vector<long> pick;
  std::function<bool(long, long)> dfs = [&](long q, long minrow) -> bool {
    if (q == need) {
      witness.blocks.push_back({blk.i, blk.c, pick});
      if (color_search(blocks, idx + 1, rows, witness)) return true;
      witness.blocks.pop_back();
      return false;
    }
    for (long r = minrow; r <= nrows - (need - q - 1); ++r) {
      if (!rows[r - 1].contains(blk.values[q])) continue;
      rows[r - 1] = rows[r - 1].minus(Multiset({blk.values[q]}));
      pick.push_back(r);
      if (dfs(q + 1, r + 1)) return true;
      pick.pop_back();
      rows[r - 1].add(blk.values[q]);
    }
    return false;
  };
  return dfs(0, 1);
}

}  // namespace

RColoring overshadowing_check(const RowTableau& T, const ParameterSet& R) {
  Multiset expanded = expand_parameters(R);
  if (T.entries() != expanded)
    throw AlphabetMismatch("tableau entries != expanded parameters");
  std::vector<BlockSpec> blocks;
  for (int i = 1; i <= R.n - 1; ++i)
    for (const auto& [c, m] : R.at(i).runs())
      for (long k = 0; k < m; ++k) {
        BlockSpec b;
        b.i = i;
        b.c = c;
        auto vals = c_block(R.n, i, c).values();
        b.values.assign(vals.rbegin(), vals.rend());
        blocks.push_back(std::move(b));
      }
  std::sort(blocks.begin(), blocks.end(), [](const BlockSpec& a,
                                             const BlockSpec& b) {
    if (a.c != b.c) return a.c < b.c;
    return a.i < b.i;
  });
  std::vector<Multiset> rows = T.rows;
  RColoring witness;
  if (!color_search(blocks, 0, rows, witness))
    throw NotOvershadowing("no block coloring descends strictly");
  return witness;
}

static void enumerate_fillings(const std::vector<long>& shape, size_t row,
                               Multiset rest, std::vector<Multiset>& acc,
                               std::vector<RowTableau>& out,
                               const std::vector<long>& full_shape) {
  if (row == shape.size()) {
    if (rest.size() != 0) return;
    out.push_back({full_shape, acc});
    return;
  }
  long need = shape[row];
  // All sub-multisets of `rest` of size `need`: choose run by run.
  std::vector<std::pair<Rational, long>> runs = rest.runs();
  std::vector<long> take(runs.size(), 0);
  std::function<void(size_t, long)> choose = [&](size_t idx, long left) {
    if (idx == runs.size()) {
      if (left != 0) return;
      Multiset row_ms, remaining;
      for (size_t t = 0; t < runs.size(); ++t) {
        if (take[t] > 0) row_ms.add(runs[t].first, take[t]);
        if (runs[t].second - take[t] > 0)
          remaining.add(runs[t].first, runs[t].second - take[t]);
      }
      acc.push_back(row_ms);
      enumerate_fillings(shape, row + 1, remaining, acc, out, full_shape);
      acc.pop_back();
      return;
    }
    for (long t = 0; t <= std::min(left, runs[idx].second); ++t) {
      take[idx] = t;
      choose(idx + 1, left - t);
    }
    take[idx] = 0;
  };
  choose(0, need);
}

std::vector<RowTableau> enumerate_row_tableaux(const std::vector<long>& shape,
                                               const Multiset& alphabet) {
  long total = std::accumulate(shape.begin(), shape.end(), 0L);
  if (total != alphabet.size())
    throw AlphabetMismatch("alphabet size != |shape|");
  std::vector<RowTableau> out;
  std::vector<Multiset> acc;
  enumerate_fillings(shape, 0, alphabet, acc, out, shape);
  std::sort(out.begin(), out.end());
  return out;
}

void CheckReport::count(bool ok, const std::string& location,
                        const std::string& lhs, const std::string& rhs) {
  ++instances;
  if (!ok) failures.push_back({location, lhs, rhs});
}

// phi sends H_i(u) to ((u+(i-1)/2)^{mu_i}/u^{mu_i}) *
// D_{i+1}(-u-(i-1)/2) / D_i(-u-(i-1)/2).
static RationalFunctionU phi_transform(
    const std::vector<RationalFunctionU>& D, int i, long mu_i) {
  Rational c = Rational(i - 1, 2);
  RationalFunctionU shift_pow(PolyU({c, Rational(1)}).pow(mu_i),
                              PolyU::monomial(mu_i));
  RationalFunctionU num = D[i].negate_arg().shift_arg(c);      // D_{i+1}(-u-c)
  RationalFunctionU den = D[i - 1].negate_arg().shift_arg(c);  // D_i(-u-c)
  return shift_pow * num / den;
}

// s_i(u) = prod_{j<=i} (u - (i-1)/2 + (j-1))^{p_j} / u^{m'_i}.
static RationalFunctionU s_series(const SliceCombinatorics& comb, int i) {
  PolyU num = PolyU::constant(1);
  for (int j = 1; j <= i; ++j) {
    Rational root = Rational(i - 1, 2) - (j - 1);
    num = num * PolyU({-root, Rational(1)}).pow(comb.p[j - 1]);
  }
  return RationalFunctionU(num, PolyU::monomial(comb.mprime(i)));
}

// Q_i(x) = prod_{j<=i} D_j(x - j + 1), the shifted principal eigenvalue.
static RationalFunctionU q_eigenvalue(const std::vector<RationalFunctionU>& D,
                                      int i, const Rational& x_shift) {
  RationalFunctionU acc = RationalFunctionU::one();
  for (int j = 1; j <= i; ++j)
    acc = acc * D[j - 1].shift_arg(Rational(1 - j));
  // Evaluate at -u + x_shift: negate then shift.
  return acc.negate_arg().shift_arg(x_shift);
}

CheckReport cross_check_highest_weight(const Monomial& p,
                                       const SliceCombinatorics& comb,
                                       const Multiset& rtilde, long order) {
  CheckReport rep;
  rep.check = "highest-weight-cross-check";
  int n = comb.n;
  ParameterSet Rt = parameter_set_from_rtilde(n, rtilde);
  auto S = z_factorize(p, Rt);
  RowTableau T = tableau_from_flags(S, rtilde, comb);
  auto J = hw_ratfun_J(p, comb.mu, n);
  auto D = tableau_D_ratfun(T, comb);
  auto A = hw_ratfun_A(S);
  for (int i = 1; i <= n - 1; ++i) {
    RationalFunctionU rhs = phi_transform(D, i, comb.mu[i - 1]);
    bool ok = series_equal_to_order(J[i - 1].expand(order), rhs.expand(order),
                                    order) &&
              J[i - 1] == rhs;
    rep.count(ok, "J node " + std::to_string(i), J[i - 1].str(), rhs.str());
    if (!ok)
      throw ConventionMismatch("J mismatch at node " + std::to_string(i) +
                               ": " + J[i - 1].expand(order).str() + " vs " +
                               rhs.expand(order).str());
  }
  for (int i = 1; i <= n - 1; ++i) {
    RationalFunctionU rhs =
        s_series(comb, i) * q_eigenvalue(D, i, Rational(i - 1, 2));
    bool ok = series_equal_to_order(A[i - 1].expand(order), rhs.expand(order),
                                    order) &&
              A[i - 1] == rhs;
    rep.count(ok, "A node " + std::to_string(i), A[i - 1].str(), rhs.str());
    if (!ok)
      throw ConventionMismatch("A mismatch at node " + std::to_string(i) +
                               ": " + A[i - 1].expand(order).str() + " vs " +
                               rhs.expand(order).str());
  }
  return rep;
}

CheckReport verify_overshadowing_bijection(const ParameterSet& R,
                                           const std::vector<long>& mu) {
  CheckReport rep;
  rep.check = "overshadowing-bijection";
  int n = R.n;
  SliceCombinatorics comb = derive_slice_combinatorics(n, R.weight(), mu);
  Multiset rtilde = expand_parameters(R);

  std::set<RowTableau> image;
  for (const auto& el : enumerate_weight_space(R, mu)) {
    auto emb = embed_crystal(el.monomial, el.witness, R);
    auto S = z_factorize(emb.monomial, parameter_set_from_rtilde(n, rtilde));
    image.insert(tableau_from_flags(S, rtilde, comb));
  }

  std::set<RowTableau> overshadowing;
  for (const auto& T : enumerate_row_tableaux(comb.p, rtilde)) {
    try {
      overshadowing_check(T, R);
      overshadowing.insert(T);
    } catch (const NotOvershadowing&) {
    }
  }

  rep.count(image == overshadowing, "image == overshadowing set",
            std::to_string(image.size()) + " tableaux",
            std::to_string(overshadowing.size()) + " tableaux");

  // Count identity against parabolic-singular permutations for the c-block
  // composition (the transpose of tau as a partition).
  std::vector<Rational> alphabet = reference_tuple(R);
  bool generic = std::set<Rational>(alphabet.begin(), alphabet.end()).size() ==
                 alphabet.size();
  if (generic && comb.N <= 9) {
    std::vector<long> kappa;
    for (int i = 1; i <= n - 1; ++i)
      for (long k = 0; k < R.at(i).size(); ++k) kappa.push_back(n - i);
    std::sort(kappa.begin(), kappa.end(), std::greater<long>());
    auto ps = enumerate_ps(comb.p, kappa);
    rep.count(static_cast<long>(overshadowing.size()) ==
                  static_cast<long>(ps.size()),
              "|overshadowing| == |PS(pi, kappa)|",
              std::to_string(overshadowing.size()), std::to_string(ps.size()));
  }
  return rep;
}

}  // namespace mvwb
