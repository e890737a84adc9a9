#include "mvwb/verify.hpp"

#include <random>

#include "mvwb/errors.hpp"
#include "mvwb/laurent.hpp"
#include "mvwb/nilpotent.hpp"

namespace mvwb {

CheckReport verify_classical_AE(const SlicePoint& g, long order) {
  CheckReport rep;
  rep.check = "classical-AE";
  if (!shape_ok(g)) throw ShapeViolation("verify_classical_AE");
  // X = mv_map(g) realizes the slice matrix; the evaluated generator matrix
  // T(u) at X is g(-u)^T, whose Gauss data gives the right-hand sides.
  SliceMatrix X = mv_map(g);
  (void)X;
  LaurentMatrix gm = point_matrix(g);
  LaurentMatrix M = gm.transpose().negate_arg();
  SeriesMatrix Ms = M.to_series(order);
  GaussDecomposition gd = gauss_decompose(Ms);
  int n = g.comb.n;
  for (int i = 1; i <= n - 1; ++i) {
    SeriesU Q = SeriesU::one('u', order);
    for (int j = 1; j <= i; ++j) Q = Q * gd.D[j - 1];
    for (long r = 1; r <= order; ++r) {
      Rational lhs = eval_A(g, i, r);
      Rational rhs = Q.coeff(-r);
      if (r % 2 == 1) rhs = -rhs;
      rep.count(lhs == rhs,
                "A i=" + std::to_string(i) + " r=" + std::to_string(r),
                rational_str(lhs), rational_str(rhs));
    }
    for (long r = 1; r <= order; ++r) {
      Rational lhs = eval_E(g, i, r, order + 1);
      Rational rhs = gd.E.at(i, i + 1).coeff(-r);
      if (r % 2 == 1) rhs = -rhs;
      rep.count(lhs == rhs,
                "E i=" + std::to_string(i) + " r=" + std::to_string(r),
                rational_str(lhs), rational_str(rhs));
    }
  }
  return rep;
}

CheckReport verify_gauss_minor(const SeriesMatrix& M, long order) {
  CheckReport rep;
  rep.check = "gauss-minor";
  GaussDecomposition gd = gauss_decompose(M);
  SeriesU prod = SeriesU::one(M.var(), M.order());
  std::vector<long> idx;
  for (long i = 1; i <= M.dim(); ++i) {
    idx.push_back(i);
    prod = prod * gd.D[i - 1];
    SeriesU minor = M.minor(idx, idx);
    bool ok = series_equal_to_order(prod, minor, order);
    rep.count(ok, "principal " + std::to_string(i), prod.str(), minor.str());
  }
  return rep;
}

namespace {

struct RfGauss {
  std::vector<RationalFunctionU> D;
  std::vector<std::vector<RationalFunctionU>> E, F;
};

RfGauss rf_gauss(const RfMatrix& M) {
  long n = M.dim;
  RfMatrix S = M;
  RfGauss out;
  out.E.assign(n + 1, std::vector<RationalFunctionU>(n + 1,
                                                     RationalFunctionU::one()));
  out.F = out.E;
  for (long k = 1; k <= n; ++k) {
    RationalFunctionU pivot = S.at(k, k);
    if (pivot.is_zero()) throw SingularPrincipalMinor("rf pivot");
    out.D.push_back(pivot);
    for (long j = k + 1; j <= n; ++j) out.E[k][j] = S.at(k, j) / pivot;
    for (long i = k + 1; i <= n; ++i) out.F[i][k] = S.at(i, k) / pivot;
    for (long i = k + 1; i <= n; ++i)
      for (long j = k + 1; j <= n; ++j)
        S.at(i, j) = S.at(i, j) - out.F[i][k] * S.at(k, j);
  }
  return out;
}

RationalFunctionU rf_minor(const RfMatrix& M, std::vector<long> rows,
                           std::vector<long> cols) {
  size_t k = rows.size();
  if (k == 0) return RationalFunctionU::one();
  if (k == 1) return M.at(rows[0], cols[0]);
  RationalFunctionU acc;
  std::vector<long> subrows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    std::vector<long> subcols;
    for (size_t l = 0; l < k; ++l)
      if (l != j) subcols.push_back(cols[l]);
    RationalFunctionU term =
        M.at(rows[0], cols[j]) * rf_minor(M, subrows, subcols);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

CheckReport verify_gauss_minor_rf(const RfMatrix& M) {
  CheckReport rep;
  rep.check = "gauss-minor-rf";
  RfGauss gd = rf_gauss(M);
  RationalFunctionU prod = RationalFunctionU::one();
  std::vector<long> idx;
  for (long i = 1; i <= M.dim; ++i) {
    idx.push_back(i);
    prod = prod * gd.D[i - 1];
    RationalFunctionU minor = rf_minor(M, idx, idx);
    rep.count(prod == minor, "principal " + std::to_string(i), prod.str(),
              minor.str());
  }
  // Shifted form with Q_i(u) = prod_{j<=i} D_j(u-j+1).
  auto Q = [&](long i, const Rational& shift) {
    RationalFunctionU acc = RationalFunctionU::one();
    for (long j = 1; j <= i; ++j)
      acc = acc * gd.D[j - 1].shift_arg(Rational(1 - j) + shift);
    return acc;
  };
  for (long i = 1; i <= M.dim; ++i) {
    RationalFunctionU lhs = gd.D[i - 1];
    RationalFunctionU rhs = Q(i, Rational(i - 1)) / Q(i - 1, Rational(i - 1));
    rep.count(lhs == rhs, "shifted D_" + std::to_string(i), lhs.str(),
              rhs.str());
  }
  return rep;
}

namespace {

// r_i(u) at lambda = N*w_1 with the m'-shifts:
// r_i(u) = u^{-lambda_i} R_i(u) (1 - u^{-1}/2)^{m'_{i-1}+m'_{i+1}}
//          / (1 - u^{-1})^{m'_i},
// written with polynomial numerators/denominators.
RationalFunctionU r_series_rf(const SliceCombinatorics& comb,
                              const Multiset& rtilde, int i) {
  int n = comb.n;
  long mo = comb.mprime(i);
  long mn = (i - 1 >= 1 ? comb.mprime(i - 1) : 0) +
            (i + 1 <= n - 1 ? comb.mprime(i + 1) : 0);
  PolyU num = PolyU::constant(1), den = PolyU::constant(1);
  if (i == n - 1) {
    num = PolyU::from_parameters(rtilde);
    den = PolyU::monomial(comb.N);
  }
  // (1 - u^{-1}/2)^mn = (u - 1/2)^mn / u^mn, likewise for (1 - u^{-1}).
  num = num * PolyU({Rational(-1, 2), Rational(1)}).pow(mn);
  den = den * PolyU::monomial(mn);
  num = num * PolyU::monomial(mo);
  den = den * PolyU({Rational(-1), Rational(1)}).pow(mo);
  return RationalFunctionU(num, den);
}

RationalFunctionU s_rf(const SliceCombinatorics& comb, int i) {
  if (i == 0) return RationalFunctionU::one();
  PolyU num = PolyU::constant(1);
  for (int j = 1; j <= i; ++j) {
    Rational root = Rational(i - 1, 2) - (j - 1);
    num = num * PolyU({-root, Rational(1)}).pow(comb.p[j - 1]);
  }
  return RationalFunctionU(num, PolyU::monomial(comb.mprime(i)));
}

}  // namespace

CheckReport verify_s_identities(int n, const std::vector<long>& mu,
                                const Multiset& rtilde, long order) {
  CheckReport rep;
  rep.check = "s-identities(order " + std::to_string(order) + ")";
  long N = rtilde.size();
  SliceCombinatorics comb;
  try {
    comb = derive_slice_combinatorics(n, lambda_first_fundamental(n, N), mu);
  } catch (const Error&) {
    throw SizeMismatch("R~ size incompatible with (n, mu)");
  }
  std::vector<RationalFunctionU> s(n);
  for (int i = 0; i <= n - 1; ++i) s[i] = s_rf(comb, i);
  for (int i = 1; i <= n - 1; ++i) {
    // Degree bookkeeping: numerator degree of s_i is m'_i.
    rep.count(s[i].num().deg() == comb.mprime(i),
              "deg s_" + std::to_string(i),
              std::to_string(s[i].num().deg()),
              std::to_string(comb.mprime(i)));
  }
  for (int i = 1; i <= n - 2; ++i) {
    RationalFunctionU lhs = r_series_rf(comb, rtilde, i) *
                            s[i - 1].shift_arg(Rational(-1, 2)) *
                            s[i + 1].shift_arg(Rational(-1, 2)) /
                            (s[i] * s[i].shift_arg(Rational(-1)));
    Rational c = Rational(i - 1, 2);
    RationalFunctionU rhs(PolyU({c, Rational(1)}).pow(comb.mu[i - 1]),
                          PolyU::monomial(comb.mu[i - 1]));
    rep.count(lhs == rhs, "defining-s-1 i=" + std::to_string(i), lhs.str(),
              rhs.str());
  }
  {
    int i = n - 1;
    RationalFunctionU lhs = r_series_rf(comb, rtilde, i) *
                            s[i - 1].shift_arg(Rational(-1, 2)) /
                            (s[i] * s[i].shift_arg(Rational(-1)));
    // psi(Q_n(-u + n/2)) = Z_N(-u + n/2) / prod_j (-u + n/2 - j + 1)^{p_j}
    // with Z_N(u) = prod_{c in R~} (u + (c-n)/2).
    PolyU zn = PolyU::constant(1);
    for (const auto& [c, m] : rtilde.runs())
      zn = zn * PolyU({(c - n) / Rational(2), Rational(1)}).pow(m);
    RationalFunctionU qn = RationalFunctionU::from_poly(zn);
    PolyU den = PolyU::constant(1);
    for (int j = 1; j <= n; ++j)
      den = den * PolyU({Rational(j - 1) - Rational(n, 2), Rational(1)})
                      .pow(comb.p[j - 1]);
    qn = qn / RationalFunctionU::from_poly(den);
    RationalFunctionU psiQ = qn.negate_arg().shift_arg(Rational(n, 2));
    Rational c = Rational(n - 2, 2);
    RationalFunctionU rhs =
        RationalFunctionU(PolyU({c, Rational(1)}).pow(comb.mu[i - 1]),
                          PolyU::monomial(comb.mu[i - 1])) *
        psiQ;
    rep.count(lhs == rhs, "defining-s-2", lhs.str(), rhs.str());
  }
  return rep;
}

CheckReport verify_f_identities(const ParameterSet& R) {
  CheckReport rep;
  rep.check = "f-identities";
  int n = R.n;
  auto f = shift_polynomials_f(R);
  SliceCombinatorics comb =
      derive_slice_combinatorics(n, R.weight(), R.weight());
  for (int k = 1; k <= n - 1; ++k) {
    rep.count(f[k - 1].deg() == comb.mpp[k - 1] && f[k - 1].is_monic(),
              "deg f_" + std::to_string(k), std::to_string(f[k - 1].deg()),
              std::to_string(comb.mpp[k - 1]));
  }
  Multiset rtilde = expand_parameters(R);
  auto F = [&](int k) {
    return RationalFunctionU::from_poly(k >= 1 ? f[k - 1]
                                               : PolyU::constant(1));
  };
  for (int i = 1; i <= n - 1; ++i) {
    RationalFunctionU lhs = RationalFunctionU::from_poly(
        PolyU::from_parameters(R.at(i)));
    RationalFunctionU top = (i == n - 1)
                                ? RationalFunctionU::from_poly(
                                      PolyU::from_parameters(rtilde)) *
                                      F(n - 2).shift_arg(Rational(-1, 2))
                                : F(i - 1).shift_arg(Rational(-1, 2)) *
                                      F(i + 1).shift_arg(Rational(-1, 2));
    RationalFunctionU rhs = top / (F(i) * F(i).shift_arg(Rational(-1)));
    rep.count(lhs == rhs, "defining-f i=" + std::to_string(i), lhs.str(),
              rhs.str());
  }
  return rep;
}

CheckReport verify_truncation_vanishing(const SlicePoint& g) {
  CheckReport rep;
  rep.check = "truncation-vanishing";
  for (int i = 1; i <= g.comb.n - 1; ++i) {
    long mp = g.comb.mprime(i);
    for (long r = mp + 1; r <= mp + 5; ++r) {
      Rational v = eval_A(g, i, r);
      rep.count(v == 0, "A i=" + std::to_string(i) + " r=" + std::to_string(r),
                rational_str(v), "0");
    }
  }
  return rep;
}

std::vector<CheckReport> run_suite_mv(const SliceCombinatorics& comb,
                                      long samples, unsigned long seed) {
  std::vector<CheckReport> out;
  CheckReport base;
  base.check = "mv-base-point";
  SliceMatrix epi = pyramid_nilpotent(comb.p);
  SlicePoint zero(comb);
  base.count(mv_map(zero).X == epi.X, "mv_map(0) == e_pi", "", "");
  base.count(jordan_type(epi.X) == comb.pi_partition(), "jordan(e_pi) == pi",
             jordan_type(epi.X).str(), comb.pi_partition().str());
  out.push_back(base);

  CheckReport oracle, round, jordan;
  oracle.check = "mv-oracle-equivalence";
  round.check = "mv-round-trip";
  jordan.check = "mv-jordan-dominance";
  SampleFamily fams[] = {SampleFamily::Upper, SampleFamily::Lower,
                         SampleFamily::ReducedProduct};
  const char* names[] = {"upper", "lower", "reduced-product"};
  for (long s = 0; s < samples; ++s) {
    SampleFamily fam = fams[s % 3];
    SlicePoint g = sample_point(comb, seed + s, fam);
    std::string loc = std::string(names[s % 3]) + " seed " +
                      std::to_string(seed + s);
    SliceMatrix X = mv_map(g);
    SliceMatrix Xo = mv_map_oracle(g);
    oracle.count(X.X == Xo.X, loc, "mv_map", "mv_map_oracle");
    round.count(mv_inverse(X) == g, loc, "mv_inverse(mv_map(g))", "g");
    jordan.count(dominance_leq(comb.pi_partition(), jordan_type(X.X)), loc,
                 jordan_type(X.X).str(), comb.pi_partition().str());
  }
  out.push_back(oracle);
  out.push_back(round);
  out.push_back(jordan);
  return out;
}

std::vector<CheckReport> run_suite_classical(const SliceCombinatorics& comb,
                                             long samples, unsigned long seed,
                                             long order) {
  std::vector<CheckReport> out;
  CheckReport ae, trunc;
  ae.check = "classical-AE";
  trunc.check = "truncation-vanishing";
  for (long s = 0; s < samples; ++s) {
    SlicePoint g = sample_point(comb, seed + s, SampleFamily::Free);
    std::string loc = "free seed " + std::to_string(seed + s);
    CheckReport one = verify_classical_AE(g, order);
    ae.instances += one.instances;
    for (auto& f : one.failures) {
      f.location = loc + " " + f.location;
      ae.failures.push_back(f);
    }
    CheckReport tv = verify_truncation_vanishing(g);
    trunc.instances += tv.instances;
    for (auto& f : tv.failures) {
      f.location = loc + " " + f.location;
      trunc.failures.push_back(f);
    }
  }
  out.push_back(ae);
  out.push_back(trunc);
  return out;
}

std::vector<CheckReport> run_suite_series(int n, long samples,
                                          unsigned long seed) {
  std::vector<CheckReport> out;
  CheckReport fs, ss;
  fs.check = "f-identities";
  ss.check = "s-identities";
  std::mt19937_64 eng(seed);
  auto draw_rat = [&]() {
    long num = static_cast<long>(eng() % 13) - 6;
    long den = 1 + static_cast<long>(eng() % 3);
    return Rational(num, den);
  };
  for (long s = 0; s < samples; ++s) {
    std::vector<Multiset> R(n - 1);
    for (int i = 0; i < n - 1; ++i) {
      long k = static_cast<long>(eng() % 3);
      for (long t = 0; t < k; ++t) R[i].add(draw_rat());
    }
    ParameterSet P(n, R);
    CheckReport one = verify_f_identities(P);
    fs.instances += one.instances;
    for (auto& f : one.failures) fs.failures.push_back(f);

    Multiset rtilde = expand_parameters(P);
    long N = rtilde.size();
    if (N == 0) continue;
    std::vector<long> mu(n - 1, 0);
    CheckReport two = verify_s_identities(n, mu, rtilde, 2 * N + 5);
    ss.instances += two.instances;
    for (auto& f : two.failures) ss.failures.push_back(f);
  }
  out.push_back(fs);
  out.push_back(ss);
  return out;
}

std::vector<CheckReport> run_suite_crystal(const ParameterSet& R,
                                           const std::vector<long>& mu,
                                           long order) {
  std::vector<CheckReport> out;
  int n = R.n;
  SliceCombinatorics comb = derive_slice_combinatorics(n, R.weight(), mu);
  Multiset rtilde = expand_parameters(R);

  CheckReport card;
  card.check = "crystal-cardinalities";
  card.count(rtilde.size() == comb.N, "|R~| == N",
             std::to_string(rtilde.size()), std::to_string(comb.N));
  out.push_back(card);

  CheckReport cross;
  cross.check = "highest-weight-cross-check";
  ParameterSet Pt = parameter_set_from_rtilde(n, rtilde);
  for (const auto& el : enumerate_weight_space(Pt, mu)) {
    CheckReport one = cross_check_highest_weight(el.monomial, comb, rtilde,
                                                 order);
    cross.instances += one.instances;
    for (auto& f : one.failures) cross.failures.push_back(f);
  }
  out.push_back(cross);

  out.push_back(verify_overshadowing_bijection(R, mu));
  return out;
}

}  // namespace mvwb
