#include "mvwb/slice_point.hpp"

#include <algorithm>

#include "mvwb/errors.hpp"
#include "mvwb/linalg.hpp"

namespace mvwb {

SlicePoint::SlicePoint(SliceCombinatorics c) : comb(std::move(c)) {
  a.resize(comb.n * comb.n);
}

Rational SlicePoint::coeff(int i, int j, long r) const {
  if (i < 1 || i > comb.n || j < 1 || j > comb.n)
    throw IndexOutOfRange("slice point entry");
  const auto& m = a[(i - 1) * comb.n + (j - 1)];
  auto it = m.find(r);
  return it == m.end() ? Rational(0) : it->second;
}

void SlicePoint::set(int i, int j, long r, const Rational& v) {
  if (i < 1 || i > comb.n || j < 1 || j > comb.n)
    throw IndexOutOfRange("slice point entry");
  auto& m = a[(i - 1) * comb.n + (j - 1)];
  if (v == 0)
    m.erase(r);
  else
    m[r] = v;
}

bool SlicePoint::operator==(const SlicePoint& o) const {
  return comb.n == o.comb.n && comb.p == o.comb.p && a == o.a;
}

std::pair<long, long> allowed_r_range(const SliceCombinatorics& comb, int i,
                                      int j) {
  long pi = comb.p[i - 1], pj = comb.p[j - 1];
  return {std::max(1L, pj - pi + 1), pj};
}

bool shape_ok(const SlicePoint& g) {
  int n = g.comb.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto [rmin, rmax] = allowed_r_range(g.comb, i, j);
      for (const auto& [r, v] : g.a[(i - 1) * n + (j - 1)]) {
        if (v == 0) continue;
        if (r < rmin || r > rmax) return false;
      }
    }
  return true;
}

LaurentMatrix point_matrix(const SlicePoint& g) {
  int n = g.comb.n;
  LaurentMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      LaurentPoly e;
      if (i == j) e.set(0, 1);
      for (const auto& [r, v] : g.a[(i - 1) * n + (j - 1)])
        e.add_term(-r, v);
      m.at(i, j) = e;
    }
  return m;
}

ValidationReport validate_point(const SlicePoint& g) {
  ValidationReport rep;
  rep.shape_ok = shape_ok(g);
  LaurentPoly det = point_matrix(g).det();
  rep.det_is_one = (det == LaurentPoly::constant(1));
  return rep;
}

LatticeGens point_to_lattice(const SlicePoint& g) {
  if (!shape_ok(g)) throw ShapeViolation("point_to_lattice");
  int n = g.comb.n;
  LatticeGens L;
  L.n = n;
  L.cols.assign(n, std::vector<LaurentPoly>(n));
  for (int j = 1; j <= n; ++j) {
    long pj = g.comb.p[j - 1];
    for (int i = 1; i <= n; ++i) {
      LaurentPoly e;
      if (i == j) e.set(pj, 1);
      for (const auto& [r, v] : g.a[(i - 1) * n + (j - 1)])
        e.add_term(pj - r, v);
      L.cols[j - 1][i - 1] = e;
    }
  }
  return L;
}

namespace {

// Coordinates of Lambda_0 / t^K Lambda_0: index (i, d) -> row-major slot.
// Order puts高 degrees first so generator leading terms fall on early
// pivots; for quotient work the caller can supply a custom priority.
struct LatticeSpan {
  int n;
  long K;
  Rref rref;
  // priority[слот] = scan position; built from a coordinate ordering.
  std::vector<long> coord_of_pos;  // pos -> flat coordinate (i-1)*K + d

  LatticeSpan(int n_, long K_, std::vector<long> order)
      : n(n_), K(K_), rref(n_ * K_), coord_of_pos(std::move(order)) {}

  // Translate a vector indexed by flat coordinate into scan order.
  QVec to_scan(const std::vector<Rational>& flat) const {
    QVec v(n * K, Rational(0));
    for (long pos = 0; pos < n * K; ++pos) v[pos] = flat[coord_of_pos[pos]];
    return v;
  }

  bool add_column(const std::vector<LaurentPoly>& col, long shift) {
    std::vector<Rational> flat(n * K, Rational(0));
    bool any = false;
    for (int i = 0; i < n; ++i) {
      for (const auto& [e, v] : col[i].terms()) {
        if (e < 0) throw NotInSlice("lattice not contained in Lambda_0");
        long d = e + shift;
        if (d >= K) continue;
        flat[i * K + d] = v;
        any = true;
      }
    }
    if (!any) return false;
    return rref.add(to_scan(flat));
  }
};

// Scan order: descending t-degree, then row index. Generators have leading
// terms at distinct high-degree coordinates, keeping elimination sparse.
std::vector<long> degree_major_order(int n, long K) {
  std::vector<long> order;
  order.reserve(n * K);
  for (long d = K - 1; d >= 0; --d)
    for (int i = 0; i < n; ++i) order.push_back(i * K + d);
  return order;
}

}  // namespace

SlicePoint canonicalize_lattice(const LatticeGens& L,
                                const SliceCombinatorics& comb) {
  int n = comb.n;
  if (L.n != n) throw BadDimensions("lattice rank");
  long K = comb.N + comb.max_p() + 4;
  LatticeSpan span(n, K, degree_major_order(n, K));
  for (const auto& col : L.cols)
    for (long s = 0; s < K; ++s) span.add_column(col, s);
  if (span.rref.pivot_count() != n * K - comb.N)
    throw NotInSlice("colength != N");

  SlicePoint g(comb);
  for (int j = 1; j <= n; ++j) {
    long pj = comb.p[j - 1];
    // Unknown support: (i, d) with d <= min(p_i, p_j) - 1.
    std::vector<std::pair<int, long>> unknowns;
    for (int i = 1; i <= n; ++i) {
      long top = std::min(comb.p[i - 1], pj) - 1;
      for (long d = 0; d <= top; ++d) unknowns.emplace_back(i, d);
    }
    auto residual = [&](int i, long d) {
      std::vector<Rational> flat(n * K, Rational(0));
      flat[(i - 1) * K + d] = 1;
      QVec v = span.to_scan(flat);
      span.rref.reduce(v);
      return v;
    };
    QVec base = residual(j, pj);
    long m = static_cast<long>(unknowns.size());
    // Columns of the small system are residuals of the unknown unit vectors;
    // gather the coordinates where anything is supported.
    std::vector<QVec> cols(m);
    for (long k = 0; k < m; ++k)
      cols[k] = residual(unknowns[k].first, unknowns[k].second);
    std::vector<long> support;
    for (long pos = 0; pos < n * K; ++pos) {
      bool used = base[pos] != 0;
      for (long k = 0; !used && k < m; ++k) used = cols[k][pos] != 0;
      if (used) support.push_back(pos);
    }
    long rows = static_cast<long>(support.size());
    // Solve base + cols * c = 0 by elimination on the stacked system.
    QMatrix A(rows, m + 1);
    for (long r = 0; r < rows; ++r) {
      for (long k = 0; k < m; ++k) A.at(r + 1, k + 1) = cols[k][support[r]];
      A.at(r + 1, m + 1) = -base[support[r]];
    }
    // Gaussian elimination with full solution-uniqueness check.
    std::vector<long> pivot_of_col(m, -1);
    long row = 1;
    for (long col = 1; col <= m && row <= rows; ++col) {
      long piv = 0;
      for (long i = row; i <= rows; ++i)
        if (A.at(i, col) != 0) { piv = i; break; }
      if (!piv) continue;
      if (piv != row)
        for (long jj = 1; jj <= m + 1; ++jj)
          std::swap(A.at(piv, jj), A.at(row, jj));
      const Rational p = A.at(row, col);
      for (long i = 1; i <= rows; ++i) {
        if (i == row) continue;
        const Rational f = A.at(i, col);
        if (f == 0) continue;
        const Rational scale = f / p;
        for (long jj = col; jj <= m + 1; ++jj)
          A.at(i, jj) -= scale * A.at(row, jj);
      }
      pivot_of_col[col - 1] = row;
      ++row;
    }
    for (long r = row; r <= rows; ++r)
      if (A.at(r, m + 1) != 0) throw NotInSlice("no chart representative");
    for (long k = 0; k < m; ++k)
      if (pivot_of_col[k] < 0) throw NotInSlice("chart solve not unique");
    for (long k = 0; k < m; ++k) {
      long r = pivot_of_col[k];
      Rational c = A.at(r, m + 1) / A.at(r, k + 1);
      auto [i, d] = unknowns[k];
      if (c != 0) g.set(i, j, pj - d, c);
    }
  }

  // The chart point must span the same module.
  LatticeGens back = point_to_lattice(g);
  LatticeSpan check(n, K, degree_major_order(n, K));
  for (const auto& col : back.cols)
    for (long s = 0; s < K; ++s) check.add_column(col, s);
  if (check.rref.pivot_count() != span.rref.pivot_count())
    throw NotInSlice("round trip changed colength");
  for (const auto& [pc, rowv] : span.rref.rows()) {
    QVec v = rowv;
    if (check.rref.reduce(v) >= 0)
      throw NotInSlice("round trip changed the lattice");
  }
  return g;
}

Rational eval_A(const SlicePoint& g, int i, long r) {
  if (i < 1 || i > g.comb.n - 1) throw IndexOutOfRange("eval_A node");
  if (r < 1) throw IndexOutOfRange("eval_A order");
  std::vector<long> idx;
  for (int k = 1; k <= i; ++k) idx.push_back(k);
  return point_matrix(g).minor(idx, idx).coeff(-r);
}

static Rational eval_ratio_coeff(const SlicePoint& g,
                                 const std::vector<long>& rows,
                                 const std::vector<long>& cols,
                                 const std::vector<long>& prin, long r,
                                 long order) {
  if (order < 0) order = std::max(g.comb.default_order(), r);
  if (r > order) throw OrderTooLarge("coefficient beyond series order");
  LaurentMatrix m = point_matrix(g);
  LaurentPoly num = m.minor(rows, cols);
  LaurentPoly den = m.minor(prin, prin);
  SeriesU sn = SeriesU::from_laurent(num, 't', order + 1);
  SeriesU sd = SeriesU::from_laurent(den, 't', order + 1);
  if (num.is_zero()) return 0;
  return (sn / sd).coeff(-r);
}

Rational eval_E(const SlicePoint& g, int i, long r, long order) {
  if (i < 1 || i > g.comb.n - 1) throw IndexOutOfRange("eval_E node");
  if (r < 1) throw IndexOutOfRange("eval_E order");
  std::vector<long> rows, cols, prin;
  for (int k = 1; k <= i - 1; ++k) rows.push_back(k);
  rows.push_back(i + 1);
  for (int k = 1; k <= i; ++k) cols.push_back(k), prin.push_back(k);
  return eval_ratio_coeff(g, rows, cols, prin, r, order);
}

Rational eval_F(const SlicePoint& g, int i, long s, long order) {
  if (i < 1 || i > g.comb.n - 1) throw IndexOutOfRange("eval_F node");
  if (s < 1) throw IndexOutOfRange("eval_F order");
  std::vector<long> rows, cols, prin;
  for (int k = 1; k <= i; ++k) rows.push_back(k), prin.push_back(k);
  for (int k = 1; k <= i - 1; ++k) cols.push_back(k);
  cols.push_back(i + 1);
  return eval_ratio_coeff(g, rows, cols, prin, s, order);
}

}  // namespace mvwb
