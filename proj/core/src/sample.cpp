#include <random>

#include "mvwb/errors.hpp"
#include "mvwb/nilpotent.hpp"
#include "mvwb/slice_point.hpp"

namespace mvwb {

namespace {

// Engine output reduced by hand: uniform_int_distribution is not portable
// across standard libraries, and samples must be reproducible by seed.
long draw_small(std::mt19937_64& eng) {
  return static_cast<long>(eng() % 7) - 3;
}

SlicePoint sample_triangular(const SliceCombinatorics& comb,
                             std::mt19937_64& eng, bool upper, bool both) {
  SlicePoint g(comb);
  int n = comb.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!both) {
        if (i == j) continue;
        if (upper && i > j) continue;
        if (!upper && i < j) continue;
      }
      auto [rmin, rmax] = allowed_r_range(comb, i, j);
      for (long r = rmin; r <= rmax; ++r) g.set(i, j, r, draw_small(eng));
    }
  return g;
}

// Evaluate det(uI - X) at u = x by exact elimination.
Rational char_poly_at(const QMatrix& X, const Rational& x) {
  long N = X.rows();
  QMatrix M(N, N);
  for (long i = 1; i <= N; ++i)
    for (long j = 1; j <= N; ++j)
      M.at(i, j) = (i == j ? x : Rational(0)) - X.at(i, j);
  Rational det = 1;
  for (long col = 1; col <= N; ++col) {
    long piv = 0;
    for (long i = col; i <= N; ++i)
      if (M.at(i, col) != 0) { piv = i; break; }
    if (!piv) return 0;
    if (piv != col) {
      for (long j = col; j <= N; ++j) std::swap(M.at(piv, j), M.at(col, j));
      det = -det;
    }
    det *= M.at(col, col);
    for (long i = col + 1; i <= N; ++i) {
      if (M.at(i, col) == 0) continue;
      Rational f = M.at(i, col) / M.at(col, col);
      for (long j = col; j <= N; ++j) M.at(i, j) -= f * M.at(col, j);
    }
  }
  return det;
}

// Coefficients of det(uI - X) (degree N, monic) via interpolation at
// u = 0..N from exact rational determinants.
QVec char_poly_coeffs(const QMatrix& X) {
  long N = X.rows();
  QMatrix V(N + 1, N + 1);
  QVec vals(N + 1);
  for (long s = 0; s <= N; ++s) {
    Rational x(s);
    Rational pw = 1;
    for (long k = 0; k <= N; ++k) {
      V.at(s + 1, k + 1) = pw;
      pw *= x;
    }
    vals[s] = char_poly_at(X, x);
  }
  auto c = solve_square(V, vals);
  if (!c) throw Error("Vandermonde solve failed");
  return *c;  // c[k] = coefficient of u^k, c[N] = 1
}

// Fill every free slice entry except the last block column at random, then
// solve the linear system making the characteristic polynomial u^N (the
// last matrix column enters det(uI - X) affine-linearly). Returns the
// nilpotent slice matrix, or nullopt when the system degenerates.
std::optional<SliceMatrix> solve_nilpotent_sample(
    const SliceCombinatorics& comb, std::mt19937_64& eng) {
  int n = comb.n;
  const auto& p = comb.p;
  long N = comb.N;
  SliceMatrix S = pyramid_nilpotent(p);
  std::vector<long> off(n + 1, 0);
  for (int i = 1; i <= n; ++i) off[i] = off[i - 1] + p[i - 1];
  for (int bi = 1; bi <= n; ++bi)
    for (int bj = 1; bj < n; ++bj) {
      long top = std::min(p[bi - 1], p[bj - 1]);
      for (long k = 1; k <= top; ++k)
        S.X.at(off[bi - 1] + k, off[bj - 1] + p[bj - 1]) = draw_small(eng);
    }
  // Unknowns: the full last column (p_n = max p, so every row is free).
  QVec base = char_poly_coeffs(S.X);
  QMatrix A(N, N);
  for (long k = 1; k <= N; ++k) {
    QMatrix Xk = S.X;
    Xk.at(k, N) += 1;
    QVec ck = char_poly_coeffs(Xk);
    for (long row = 1; row <= N; ++row)
      A.at(row, k) = ck[row - 1] - base[row - 1];
  }
  QVec rhs(N);
  for (long row = 1; row <= N; ++row) rhs[row - 1] = -base[row - 1];
  auto x = solve_square(A, rhs);
  if (!x) return std::nullopt;
  for (long k = 1; k <= N; ++k) S.X.at(k, N) += (*x)[k - 1];
  if (!S.X.pow(N).is_zero()) throw Error("nilpotent solve inconsistent");
  return S;
}

// Random unitriangular column operations over C[t], truncated; the lattice
// is unchanged, the generators are not.
LatticeGens scramble_columns(const LatticeGens& L, std::mt19937_64& eng) {
  LatticeGens out = L;
  int n = out.n;
  for (int rep = 0; rep < 2 * n; ++rep) {
    int j = static_cast<int>(eng() % n);
    int k = static_cast<int>(eng() % n);
    if (j == k) continue;
    LaurentPoly q;
    q.set(0, draw_small(eng));
    q.set(1, draw_small(eng));
    q.set(2, draw_small(eng));
    for (int i = 0; i < n; ++i)
      out.cols[k][i] = out.cols[k][i] + q * out.cols[j][i];
  }
  return out;
}

}  // namespace

SlicePoint sample_point(const SliceCombinatorics& comb, unsigned long seed,
                        SampleFamily family) {
  std::mt19937_64 eng(seed);
  switch (family) {
    case SampleFamily::Upper:
      return sample_triangular(comb, eng, true, false);
    case SampleFamily::Lower:
      return sample_triangular(comb, eng, false, false);
    case SampleFamily::Free:
      return sample_triangular(comb, eng, false, true);
    case SampleFamily::ReducedProduct: {
      for (int attempt = 0; attempt < 100; ++attempt) {
        auto S = solve_nilpotent_sample(comb, eng);
        if (!S) continue;
        SlicePoint g = mv_inverse(*S);
        // Route through the lattice so the sample exercises reduction of
        // non-canonical generators.
        LatticeGens L = scramble_columns(point_to_lattice(g), eng);
        SlicePoint back = canonicalize_lattice(L, comb);
        if (!(back == g))
          throw Error("reduced-product canonicalization mismatch");
        return back;
      }
      throw Error("reduced-product sampling exceeded attempt cap");
    }
  }
  throw Error("unknown sample family");
}

}  // namespace mvwb
