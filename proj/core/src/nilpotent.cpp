#include "mvwb/nilpotent.hpp"

#include <algorithm>

#include "mvwb/errors.hpp"

namespace mvwb {

Pyramid::Pyramid(std::vector<long> parts) : p(std::move(parts)) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw ShapeViolation("negative pyramid row");
    if (i && p[i] < p[i - 1]) throw ShapeViolation("pyramid rows must grow");
    N += p[i];
  }
}

long Pyramid::row_offset(long i) const {
  if (i < 1 || i > rows()) throw IndexOutOfRange("pyramid row");
  long off = 0;
  for (long r = 1; r < i; ++r) off += p[r - 1];
  return off;
}

long Pyramid::box(long i, long k) const {
  if (k < 1 || k > p[i - 1]) throw IndexOutOfRange("pyramid box");
  return row_offset(i) + k;
}

long Pyramid::row_of_box(long b) const {
  if (b < 1 || b > N) throw IndexOutOfRange("pyramid box number");
  long acc = 0;
  for (long i = 1; i <= rows(); ++i) {
    acc += p[i - 1];
    if (b <= acc) return i;
  }
  throw IndexOutOfRange("pyramid box number");
}

long Pyramid::col_of_box(long b) const {
  long i = row_of_box(b);
  long k = b - row_offset(i);  // k-th from the right
  long ncols = p.back();
  return ncols - k + 1;
}

SliceMatrix::SliceMatrix(std::vector<long> p_, QMatrix X_)
    : p(std::move(p_)), X(std::move(X_)) {
  long n = 0;
  for (long x : p) n += x;
  if (X.rows() != n || X.cols() != n)
    throw BadDimensions("slice matrix size != |pi|");
}

bool slice_shape_ok(const SliceMatrix& S) {
  const auto& p = S.p;
  long nb = static_cast<long>(p.size());
  std::vector<long> off(nb + 1, 0);
  for (long i = 1; i <= nb; ++i) off[i] = off[i - 1] + p[i - 1];
  for (long bi = 1; bi <= nb; ++bi)
    for (long bj = 1; bj <= nb; ++bj)
      for (long r = 1; r <= p[bi - 1]; ++r)
        for (long c = 1; c <= p[bj - 1]; ++c) {
          const Rational& v = S.X.at(off[bi - 1] + r, off[bj - 1] + c);
          bool subdiag = (bi == bj && r == c + 1);
          bool final_col =
              (c == p[bj - 1] && r <= std::min(p[bi - 1], p[bj - 1]));
          if (subdiag) {
            if (v != 1) return false;
          } else if (!final_col && v != 0) {
            return false;
          }
        }
  return true;
}

SliceMatrix pyramid_nilpotent(const std::vector<long>& p) {
  Pyramid pyr(p);
  QMatrix X(pyr.N, pyr.N);
  for (long i = 1; i <= pyr.rows(); ++i)
    for (long k = 1; k < p[i - 1]; ++k)
      X.at(pyr.box(i, k + 1), pyr.box(i, k)) = 1;
  return SliceMatrix(p, X);
}

SliceMatrix mv_map(const SlicePoint& g) {
  if (!shape_ok(g)) throw ShapeViolation("mv_map");
  int n = g.comb.n;
  const auto& p = g.comb.p;
  SliceMatrix S = pyramid_nilpotent(p);
  std::vector<long> off(n + 1, 0);
  for (int i = 1; i <= n; ++i) off[i] = off[i - 1] + p[i - 1];
  for (int bi = 1; bi <= n; ++bi)
    for (int bj = 1; bj <= n; ++bj) {
      long top = std::min(p[bi - 1], p[bj - 1]);
      for (long k = 1; k <= top; ++k) {
        Rational v = g.coeff(bi, bj, p[bj - 1] - k + 1);
        if (v != 0) S.X.at(off[bi - 1] + k, off[bj - 1] + p[bj - 1]) = -v;
      }
    }
  return S;
}

namespace {

// Reduced span of the lattice modulo t^K with pyramid-basis coordinates
// scanned last, so reduction expresses vectors in the quotient basis.
struct QuotientSpan {
  int n;
  long K;
  std::vector<long> p;
  std::vector<long> coord_of_pos;
  std::vector<long> pos_of_coord;
  Rref rref;

  QuotientSpan(const SliceCombinatorics& comb, long K_)
      : n(comb.n), K(K_), p(comb.p), rref(comb.n * K_) {
    // Non-basis coordinates (d >= p_i) first, by descending degree; basis
    // coordinates (d < p_i) last.
    for (long d = K - 1; d >= 0; --d)
      for (int i = 0; i < n; ++i)
        if (d >= p[i]) coord_of_pos.push_back(i * K + d);
    for (int i = 0; i < n; ++i)
      for (long d = p[i] - 1; d >= 0; --d) coord_of_pos.push_back(i * K + d);
    pos_of_coord.assign(n * K, -1);
    for (long pos = 0; pos < n * K; ++pos)
      pos_of_coord[coord_of_pos[pos]] = pos;
  }

  long basis_positions() const {
    long nb = 0;
    for (int i = 0; i < n; ++i) nb += p[i];
    return nb;
  }

  void add_column(const std::vector<LaurentPoly>& col, long shift) {
    QVec v(n * K, Rational(0));
    bool any = false;
    for (int i = 0; i < n; ++i)
      for (const auto& [e, w] : col[i].terms()) {
        if (e < 0) throw NotABasis("lattice not contained in Lambda_0");
        long d = e + shift;
        if (d >= K) continue;
        v[pos_of_coord[i * K + d]] = w;
        any = true;
      }
    if (any) rref.add(std::move(v));
  }
};

}  // namespace

SliceMatrix mv_map_oracle(const SlicePoint& g) {
  LatticeGens L = point_to_lattice(g);
  const SliceCombinatorics& comb = g.comb;
  int n = comb.n;
  long N = comb.N;
  long K = N + comb.max_p() + 4;
  QuotientSpan span(comb, K);
  for (const auto& col : L.cols)
    for (long s = 0; s < K; ++s) span.add_column(col, s);
  if (span.rref.pivot_count() != n * K - N)
    throw NotABasis("colength != N (det != 1 or malformed input)");
  // Every pivot must sit on a non-basis position; otherwise the pyramid
  // basis does not descend to a basis of the quotient.
  long nonbasis = n * K - span.basis_positions();
  for (const auto& [pc, row] : span.rref.rows())
    if (pc >= nonbasis) throw NotABasis("pyramid basis not independent");

  Pyramid pyr(comb.p);
  QMatrix X(N, N);
  for (int i = 1; i <= n; ++i)
    for (long d = 0; d < comb.p[i - 1]; ++d) {
      // t * (t^d e_i) reduced against the lattice.
      QVec v(n * K, Rational(0));
      v[span.pos_of_coord[(i - 1) * K + (d + 1)]] = 1;
      span.rref.reduce(v);
      for (long pos = 0; pos < n * K; ++pos) {
        if (v[pos] == 0) continue;
        if (pos < nonbasis) throw NotABasis("reduction left non-basis terms");
        long coord = span.coord_of_pos[pos];
        long ii = coord / K + 1, dd = coord % K;
        X.at(pyr.box(ii, dd + 1), pyr.box(i, d + 1)) = v[pos];
      }
    }
  SliceMatrix out(comb.p, X);
  return out;
}

SlicePoint mv_inverse(const SliceMatrix& S) {
  if (!slice_shape_ok(S)) throw ShapeViolation("mv_inverse");
  long N = S.N();
  if (!S.X.pow(N).is_zero()) throw NotNilpotent("mv_inverse");
  SliceCombinatorics comb = combinatorics_from_pi(S.p);
  int n = comb.n;
  std::vector<long> off(n + 1, 0);
  for (int i = 1; i <= n; ++i) off[i] = off[i - 1] + S.p[i - 1];
  SlicePoint g(comb);
  for (int bi = 1; bi <= n; ++bi)
    for (int bj = 1; bj <= n; ++bj) {
      long top = std::min(S.p[bi - 1], S.p[bj - 1]);
      for (long k = 1; k <= top; ++k) {
        const Rational& v =
            S.X.at(off[bi - 1] + k, off[bj - 1] + S.p[bj - 1]);
        // The subdiagonal 1 of a diagonal block overlaps the final column
        // only when p_j = 1... it never does: row k <= p_j, col p_j, and
        // subdiagonal means k = p_j + 1. Safe to read all rows.
        if (v != 0) g.set(bi, bj, S.p[bj - 1] - k + 1, -v);
      }
    }
  return g;
}

Partition jordan_type(const QMatrix& X) {
  long N = X.rows();
  if (X.cols() != N) throw BadDimensions("jordan_type needs square input");
  if (!X.pow(N).is_zero()) throw NotNilpotent("jordan_type");
  std::vector<long> ranks{N};  // rank of X^0
  QMatrix P = QMatrix::identity(N);
  while (true) {
    P = P * X;
    long r = P.rank();
    ranks.push_back(r);
    if (r == 0) break;
  }
  std::vector<long> cols;  // transpose of the Jordan partition
  for (size_t k = 1; k < ranks.size(); ++k) {
    long mult = ranks[k - 1] - ranks[k];
    if (mult > 0) cols.push_back(mult);
  }
  return partition_transpose(Partition(cols));
}

bool orbit_leq_check(const QMatrix& X, const Partition& tau) {
  return dominance_leq(jordan_type(X), tau);
}

}  // namespace mvwb
