#include "mvwb/monomial.hpp"

#include <algorithm>
#include <set>

#include "mvwb/errors.hpp"

namespace mvwb {

Monomial Monomial::y(int i, const Rational& k, long e) {
  Monomial m;
  m.add(i, k, e);
  return m;
}

void Monomial::add(int i, const Rational& k, long e) {
  if (e == 0) return;
  Key key{i, k};
  auto it = e_.find(key);
  if (it == e_.end()) {
    e_[key] = e;
    return;
  }
  it->second += e;
  if (it->second == 0) e_.erase(it);
}

long Monomial::exponent(int i, const Rational& k) const {
  auto it = e_.find({i, k});
  return it == e_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (const auto& [key, e] : o.e_) m.add(key.first, key.second, e);
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m;
  for (const auto& [key, e] : e_) m.e_[key] = -e;
  return m;
}

Monomial Monomial::pow(long k) const {
  Monomial m;
  if (k == 0) return m;
  for (const auto& [key, e] : e_) m.e_[key] = e * k;
  return m;
}

std::vector<long> Monomial::weight(int n) const {
  std::vector<long> w(n - 1, 0);
  for (const auto& [key, e] : e_) {
    if (key.first < 1 || key.first > n - 1)
      throw IndexOutOfRange("monomial node outside rank");
    w[key.first - 1] += e;
  }
  return w;
}

std::string Monomial::str() const {
  if (e_.empty()) return "1";
  std::string s;
  for (const auto& [key, e] : e_) {
    if (!s.empty()) s += " ";
    s += "y(" + std::to_string(key.first) + "," + rational_str(key.second) +
         ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

Monomial z_monomial(int n, int i, const Rational& k) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("z node");
  Monomial m;
  m.add(i, k, 1);
  m.add(i, k + 2, 1);
  if (i - 1 >= 1) m.add(i - 1, k + 1, -1);
  if (i + 1 <= n - 1) m.add(i + 1, k + 1, -1);
  return m;
}

std::vector<long> monomial_weight(const Monomial& p, int n) {
  return p.weight(n);
}

static Monomial y_of_parameters(const ParameterSet& R) {
  Monomial m;
  for (int i = 1; i <= R.n - 1; ++i)
    for (const auto& [v, mult] : R.at(i).runs())
      m = m * Monomial::y(i, v, mult);
  return m;
}

std::vector<Multiset> z_factorize(const Monomial& p, const ParameterSet& R) {
  int n = R.n;
  // q = y_R / p should be a product of z_{i,k} with nonnegative exponents.
  Monomial q = y_of_parameters(R) * p.inverse();
  std::vector<Multiset> S(n - 1);
  if (q.is_one()) return S;

  // Group the support into cosets of 2Z by the residue of k - i; the z-grid
  // recursion never mixes cosets.
  auto mod_two = [](const Rational& x) {
    Rational half = x / 2;
    Rational r = x - 2 * Rational(boost::multiprecision::numerator(half) /
                                  boost::multiprecision::denominator(half));
    while (r < 0) r += 2;
    while (r >= 2) r -= 2;
    return r;
  };
  std::map<Rational, std::vector<Monomial::Key>> cosets;
  for (const auto& [key, e] : q.factors())
    cosets[mod_two(key.second - key.first)].push_back(key);

  std::map<Monomial::Key, long> s;
  for (const auto& [res, keys] : cosets) {
    Rational kmin = keys.front().second, kmax = keys.front().second;
    for (const auto& key : keys) {
      kmin = std::min(kmin, key.second);
      kmax = std::max(kmax, key.second);
    }
    // s_{i,k} = q_{i,k} - s_{i,k-2} + sum_{j~i} s_{j,k-1}, k ascending.
    for (Rational k = kmin - 2; k <= kmax; k += 1) {
      for (int i = 1; i <= n - 1; ++i) {
        Rational keyres = k - i;
        Rational diff = keyres - res;
        if (!is_integer(diff / 2)) continue;  // wrong coset for this node
        auto find = [&](int j, const Rational& kk) {
          auto it = s.find({j, kk});
          return it == s.end() ? 0L : it->second;
        };
        long val = q.exponent(i, k) - find(i, k - 2);
        if (i - 1 >= 1) val += find(i - 1, k - 1);
        if (i + 1 <= n - 1) val += find(i + 1, k - 1);
        if (val != 0) s[{i, k}] = val;
      }
    }
  }
  // Validate: nonnegative exponents and exact reconstruction.
  Monomial zprod;
  for (const auto& [key, e] : s) {
    if (e < 0) throw NotFactorizable(p.str());
    zprod = zprod * z_monomial(n, key.first, key.second).pow(e);
  }
  if (zprod != q) throw NotFactorizable(p.str());
  for (const auto& [key, e] : s) S[key.first - 1].add(key.second, e);
  return S;
}

Monomial fundamental_element(int n, int i, const Rational& c,
                             const Partition& xi) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("fundamental node");
  if (xi.num_parts() > i || xi.part(1) > n - i)
    throw BoxViolation("partition outside the i x (n-i) box");
  Monomial m = Monomial::y(i, c);
  for (long a = 1; a <= xi.num_parts(); ++a)
    for (long b = 1; b <= xi.part(a); ++b)
      m = m * z_monomial(n, static_cast<int>(i - a + b), c - a - b).inverse();
  return m;
}

Monomial PartitionAssignment::product(int n) const {
  Monomial m;
  for (const auto& e : entries)
    m = m * fundamental_element(n, e.i, e.c, e.xi);
  return m;
}

namespace {

struct VertexChoice {
  int i;
  Rational c;
  std::vector<Partition> boxes;                    // lex order
  std::vector<std::map<Monomial::Key, long>> shadow;  // z-multiset per box
};

std::vector<VertexChoice> vertex_choices(const ParameterSet& R) {
  std::vector<VertexChoice> out;
  for (int i = 1; i <= R.n - 1; ++i)
    for (const auto& [c, mult] : R.at(i).runs())
      for (long m = 0; m < mult; ++m) {
        VertexChoice v;
        v.i = i;
        v.c = c;
        v.boxes = partitions_in_box(i, R.n - i);
        for (const auto& xi : v.boxes) {
          std::map<Monomial::Key, long> sh;
          for (long a = 1; a <= xi.num_parts(); ++a)
            for (long b = 1; b <= xi.part(a); ++b)
              sh[{static_cast<int>(i - a + b), c - a - b}] += 1;
          v.shadow.push_back(std::move(sh));
        }
        out.push_back(std::move(v));
      }
  return out;
}

bool fits(const std::map<Monomial::Key, long>& shadow,
          const std::map<Monomial::Key, long>& residual) {
  for (const auto& [key, e] : shadow) {
    auto it = residual.find(key);
    if (it == residual.end() || it->second < e) return false;
  }
  return true;
}

bool search_assignment(const std::vector<VertexChoice>& verts, size_t idx,
                       std::map<Monomial::Key, long>& residual, long cells,
                       std::vector<long>& pick) {
  if (idx == verts.size()) return cells == 0;
  const auto& v = verts[idx];
  for (size_t b = 0; b < v.boxes.size(); ++b) {
    const auto& sh = v.shadow[b];
    long sz = v.boxes[b].total();
    if (sz > cells) continue;
    if (!fits(sh, residual)) continue;
    for (const auto& [key, e] : sh) residual[key] -= e;
    pick[idx] = static_cast<long>(b);
    if (search_assignment(verts, idx + 1, residual, cells - sz, pick))
      return true;
    for (const auto& [key, e] : sh) residual[key] += e;
  }
  return false;
}

}  // namespace

PartitionAssignment crystal_membership(const Monomial& p,
                                       const ParameterSet& R) {
  std::vector<Multiset> S;
  try {
    S = z_factorize(p, R);
  } catch (const NotFactorizable&) {
    throw NotMember(p.str());
  }
  std::map<Monomial::Key, long> residual;
  long cells = 0;
  for (int i = 1; i <= R.n - 1; ++i)
    for (const auto& [k, m] : S[i - 1].runs()) {
      residual[{i, k}] = m;
      cells += m;
    }
  auto verts = vertex_choices(R);
  std::vector<long> pick(verts.size(), 0);
  if (!search_assignment(verts, 0, residual, cells, pick))
    throw NotMember(p.str());
  PartitionAssignment out;
  for (size_t t = 0; t < verts.size(); ++t)
    out.entries.push_back({verts[t].i, verts[t].c, verts[t].boxes[pick[t]]});
  return out;
}

static void enumerate_rec(const std::vector<VertexChoice>& verts, size_t idx,
                          int n, Monomial acc,
                          std::vector<PartitionAssignment::Entry>& chosen,
                          const std::vector<long>* target,
                          std::map<Monomial, PartitionAssignment>& out) {
  if (idx == verts.size()) {
    if (target && acc.weight(n) != *target) return;
    if (!out.count(acc)) {
      PartitionAssignment w;
      w.entries = chosen;
      out.emplace(std::move(acc), std::move(w));
    }
    return;
  }
  const auto& v = verts[idx];
  for (const auto& xi : v.boxes) {
    chosen.push_back({v.i, v.c, xi});
    enumerate_rec(verts, idx + 1, n,
                  acc * fundamental_element(n, v.i, v.c, xi), chosen, target,
                  out);
    chosen.pop_back();
  }
}

std::vector<CrystalElement> enumerate_weight_space(
    const ParameterSet& R, const std::vector<long>& mu) {
  if (static_cast<int>(mu.size()) != R.n - 1)
    throw BadDimensions("mu length");
  auto verts = vertex_choices(R);
  std::map<Monomial, PartitionAssignment> out;
  std::vector<PartitionAssignment::Entry> chosen;
  enumerate_rec(verts, 0, R.n, Monomial(), chosen, &mu, out);
  std::vector<CrystalElement> res;
  for (auto& [m, w] : out) res.push_back({m, w});
  return res;
}

std::vector<CrystalElement> enumerate_crystal(const ParameterSet& R) {
  auto verts = vertex_choices(R);
  std::map<Monomial, PartitionAssignment> out;
  std::vector<PartitionAssignment::Entry> chosen;
  enumerate_rec(verts, 0, R.n, Monomial(), chosen, nullptr, out);
  std::vector<CrystalElement> res;
  for (auto& [m, w] : out) res.push_back({m, w});
  return res;
}

EmbeddedElement embed_crystal(const Monomial& p,
                              const PartitionAssignment& witness,
                              const ParameterSet& R) {
  int n = R.n;
  if (witness.product(n) != p)
    throw ConventionMismatch("witness does not produce the monomial");
  PartitionAssignment tilde;
  for (const auto& e : witness.entries) {
    Partition xit = partition_transpose(e.xi);
    int span = n - e.i;  // number of c-block factors
    for (int q = 1; q <= span; ++q) {
      long h = xit.part(q) + span - q;
      std::vector<long> column(h, 1);
      tilde.entries.push_back(
          {n - 1, e.c + span + 1 - 2 * q, Partition(column)});
    }
  }
  if (tilde.product(n) != p)
    throw ConventionMismatch("embedded witness does not reproduce monomial");
  return {p, tilde};
}

bool flag_check(const std::vector<Multiset>& S, const Multiset& rtilde,
                const std::vector<long>& mu, FlagShiftConvention conv) {
  long N = rtilde.size();
  int n = static_cast<int>(S.size()) + 1;
  SliceCombinatorics comb =
      derive_slice_combinatorics(n, lambda_first_fundamental(n, N), mu);
  for (int i = 1; i <= n - 1; ++i)
    if (S[i - 1].size() != comb.mprime(i)) return false;
  for (int i = 1; i <= n - 2; ++i)
    if (!S[i - 1].shifted(n - i + 1).submultiset_of(S[i].shifted(n - i - 1 + 1)))
      return false;
  long final_shift = conv == FlagShiftConvention::ShiftTwo ? 2 : 1;
  return S[n - 2].shifted(final_shift).submultiset_of(rtilde);
}

std::vector<RationalFunctionU> hw_ratfun_J(const Monomial& p,
                                           const std::vector<long>& mu,
                                           int n) {
  if (static_cast<int>(mu.size()) != n - 1) throw BadDimensions("mu length");
  std::vector<RationalFunctionU> J(
      n - 1, RationalFunctionU::one());
  for (int i = 1; i <= n - 1; ++i) {
    PolyU num = PolyU::constant(1), den = PolyU::monomial(mu[i - 1]);
    for (const auto& [key, e] : p.factors()) {
      if (key.first != i) continue;
      PolyU lin({-key.second / 2, Rational(1)});
      if (e > 0)
        num = num * lin.pow(e);
      else
        den = den * lin.pow(-e);
    }
    J[i - 1] = RationalFunctionU(num, den);
  }
  return J;
}

std::vector<SeriesU> hw_series_J(const Monomial& p,
                                 const std::vector<long>& mu, int n,
                                 long order) {
  auto J = hw_ratfun_J(p, mu, n);
  std::vector<SeriesU> out;
  for (const auto& f : J) out.push_back(f.expand(order));
  return out;
}

std::vector<RationalFunctionU> hw_ratfun_A(const std::vector<Multiset>& S) {
  std::vector<RationalFunctionU> A;
  for (const auto& Si : S) {
    PolyU num = PolyU::from_parameters(Si);
    PolyU den = PolyU::monomial(Si.size());
    A.push_back(RationalFunctionU(num, den));
  }
  return A;
}

std::vector<SeriesU> hw_series_A(const std::vector<Multiset>& S, long order) {
  auto A = hw_ratfun_A(S);
  std::vector<SeriesU> out;
  for (const auto& f : A) out.push_back(f.expand(order));
  return out;
}

}  // namespace mvwb
