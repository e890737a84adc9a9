#include "mvwb/series.hpp"

#include <algorithm>

#include "mvwb/errors.hpp"
#include "mvwb/laurent.hpp"

namespace mvwb {

SeriesU::SeriesU(char var, long lead, long order, std::vector<Rational> coeffs)
    : var_(var), lead_(lead), order_(order), c_(std::move(coeffs)) {
  if (order_ < 0) throw OrderTooLarge("negative order");
  if (static_cast<long>(c_.size()) > order_ + 1) c_.resize(order_ + 1);
}

SeriesU SeriesU::constant(char var, const Rational& c, long order) {
  return SeriesU(var, 0, order, {c});
}

SeriesU SeriesU::from_laurent(const LaurentPoly& p, char var, long order) {
  if (p.is_zero()) return zero(var, order);
  long lead = p.max_exp();
  std::vector<Rational> c(order + 1, Rational(0));
  for (const auto& [e, v] : p.terms())
    if (lead - e <= order) c[lead - e] = v;
  // Terms below the window are silently dropped; callers choose order large
  // enough for the exponents they will read.
  return SeriesU(var, lead, order, std::move(c));
}

void SeriesU::check_var(const SeriesU& o) const {
  if (var_ != o.var_) throw SizeMismatch("series variable mismatch");
}

Rational SeriesU::coeff(long e) const {
  if (e > lead_) return 0;
  long k = lead_ - e;
  if (k > order_)
    throw IndeterminateComparison("coefficient below truncation window");
  return k < static_cast<long>(c_.size()) ? c_[k] : Rational(0);
}

bool SeriesU::known_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

SeriesU SeriesU::operator+(const SeriesU& o) const {
  check_var(o);
  long lead = std::max(lead_, o.lead_);
  long bottom = std::max(window_bottom(), o.window_bottom());
  long order = lead - bottom;
  if (order < 0) throw IndeterminateComparison("disjoint series windows");
  std::vector<Rational> c(order + 1, Rational(0));
  for (long e = lead; e >= bottom; --e)
    c[lead - e] = coeff(e) + o.coeff(e);
  return SeriesU(var_, lead, order, std::move(c));
}

SeriesU SeriesU::operator-(const SeriesU& o) const { return *this + (-o); }

SeriesU SeriesU::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return SeriesU(var_, lead_, order_, std::move(c));
}

SeriesU SeriesU::operator*(const Rational& s) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= s;
  return SeriesU(var_, lead_, order_, std::move(c));
}

SeriesU SeriesU::operator*(const SeriesU& o) const {
  check_var(o);
  long lead = lead_ + o.lead_;
  long order = std::min(order_, o.order_);
  std::vector<Rational> c(order + 1, Rational(0));
  long n1 = static_cast<long>(c_.size()), n2 = static_cast<long>(o.c_.size());
  for (long i = 0; i < n1; ++i) {
    if (c_[i] == 0) continue;
    long jmax = std::min(n2 - 1, order - i);
    for (long j = 0; j <= jmax; ++j) {
      if (o.c_[j] == 0) continue;
      c[i + j] += c_[i] * o.c_[j];
    }
  }
  return SeriesU(var_, lead, order, std::move(c));
}

SeriesU SeriesU::stripped() const {
  long k = 0;
  while (k <= order_ &&
         (k >= static_cast<long>(c_.size()) || c_[k] == 0))
    ++k;
  if (k > order_)
    throw SingularPrincipalMinor("series is zero to its truncation order");
  std::vector<Rational> c(c_.begin() + k, c_.end());
  return SeriesU(var_, lead_ - k, order_ - k, std::move(c));
}

SeriesU SeriesU::truncated(long order) const {
  if (order > order_) throw OrderTooLarge("cannot extend a series window");
  std::vector<Rational> c = c_;
  if (static_cast<long>(c.size()) > order + 1) c.resize(order + 1);
  return SeriesU(var_, lead_, order, std::move(c));
}

SeriesU SeriesU::inverse() const {
  SeriesU a = stripped();
  const Rational a0 = a.c_.empty() ? Rational(0) : a.c_[0];
  long order = a.order_;
  std::vector<Rational> b(order + 1, Rational(0));
  b[0] = Rational(1) / a0;
  for (long k = 1; k <= order; ++k) {
    Rational acc = 0;
    long jmax = std::min<long>(k, static_cast<long>(a.c_.size()) - 1);
    for (long j = 1; j <= jmax; ++j) acc += a.c_[j] * b[k - j];
    b[k] = -acc / a0;
  }
  return SeriesU(var_, -a.lead_, order, std::move(b));
}

std::string SeriesU::str() const {
  std::string v(1, var_);
  std::string s;
  for (long k = 0; k <= order_ && k < static_cast<long>(c_.size()); ++k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    long e = lead_ - k;
    s += rational_str(c_[k]);
    if (e != 0) s += "*" + v + "^" + std::to_string(e);
  }
  if (s.empty()) s = "0";
  s += " + O(" + v + "^" + std::to_string(window_bottom() - 1) + ")";
  return s;
}

bool series_equal_to_order(const SeriesU& a, const SeriesU& b, long k) {
  long top = std::max(a.lead(), b.lead());
  long bottom = top - k;
  if (bottom < a.window_bottom() || bottom < b.window_bottom())
    throw IndeterminateComparison("series window shorter than comparison");
  for (long e = top; e >= bottom; --e)
    if (a.coeff(e) != b.coeff(e)) return false;
  return true;
}

bool series_equal_common(const SeriesU& a, const SeriesU& b) {
  long top = std::max(a.lead(), b.lead());
  long bottom = std::max(a.window_bottom(), b.window_bottom());
  if (bottom > top) throw IndeterminateComparison("disjoint series windows");
  for (long e = top; e >= bottom; --e)
    if (a.coeff(e) != b.coeff(e)) return false;
  return true;
}

SeriesMatrix::SeriesMatrix(long dim, char var, long order)
    : dim_(dim), var_(var), order_(order),
      e_(dim * dim, SeriesU::zero(var, order)) {}

SeriesMatrix SeriesMatrix::identity(long dim, char var, long order) {
  SeriesMatrix m(dim, var, order);
  for (long i = 1; i <= dim; ++i) m.at(i, i) = SeriesU::one(var, order);
  return m;
}

SeriesU& SeriesMatrix::at(long i, long j) {
  if (i < 1 || i > dim_ || j < 1 || j > dim_)
    throw IndexOutOfRange("series matrix entry");
  return e_[(i - 1) * dim_ + (j - 1)];
}

const SeriesU& SeriesMatrix::at(long i, long j) const {
  return const_cast<SeriesMatrix*>(this)->at(i, j);
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  if (dim_ != o.dim_) throw SizeMismatch("series matrix product");
  SeriesMatrix r(dim_, var_, order_);
  for (long i = 1; i <= dim_; ++i)
    for (long j = 1; j <= dim_; ++j) {
      SeriesU acc = SeriesU::zero(var_, order_);
      for (long k = 1; k <= dim_; ++k) acc = acc + at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

static SeriesU series_det_cofactor(const SeriesMatrix& m,
                                   std::vector<long> rows,
                                   std::vector<long> cols) {
  size_t k = rows.size();
  if (k == 0) return SeriesU::one(m.var(), m.order());
  if (k == 1) return m.at(rows[0], cols[0]);
  SeriesU acc = SeriesU::zero(m.var(), m.order());
  std::vector<long> subrows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    std::vector<long> subcols;
    for (size_t l = 0; l < k; ++l)
      if (l != j) subcols.push_back(cols[l]);
    SeriesU term = m.at(rows[0], cols[j]) *
                   series_det_cofactor(m, subrows, subcols);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

SeriesU SeriesMatrix::minor(const std::vector<long>& rows,
                            const std::vector<long>& cols) const {
  if (rows.size() != cols.size())
    throw IndexOutOfRange("minor needs |rows| == |cols|");
  for (long r : rows)
    if (r < 1 || r > dim_) throw IndexOutOfRange("minor row index");
  for (long c : cols)
    if (c < 1 || c > dim_) throw IndexOutOfRange("minor column index");
  return series_det_cofactor(*this, rows, cols);
}

SeriesU SeriesMatrix::det() const {
  std::vector<long> all(dim_);
  for (long i = 0; i < dim_; ++i) all[i] = i + 1;
  return minor(all, all);
}

GaussDecomposition gauss_decompose(const SeriesMatrix& M) {
  long n = M.dim();
  char var = M.var();
  long order = M.order();
  SeriesMatrix F = SeriesMatrix::identity(n, var, order);
  SeriesMatrix E = SeriesMatrix::identity(n, var, order);
  std::vector<SeriesU> D;
  SeriesMatrix S = M;  // shrinking Schur complement, stored in place
  for (long k = 1; k <= n; ++k) {
    SeriesU pivot = S.at(k, k);
    // Unit series means nonzero constant term.
    if (pivot.lead() < 0 || pivot.coeff(0) == 0)
      throw SingularPrincipalMinor("pivot " + std::to_string(k));
    D.push_back(pivot);
    SeriesU inv = pivot.inverse();
    for (long j = k + 1; j <= n; ++j) E.at(k, j) = inv * S.at(k, j);
    for (long i = k + 1; i <= n; ++i) F.at(i, k) = S.at(i, k) * inv;
    for (long i = k + 1; i <= n; ++i)
      for (long j = k + 1; j <= n; ++j)
        S.at(i, j) = S.at(i, j) - F.at(i, k) * S.at(k, j);
  }
  // Internal consistency: D_i = Delta_{1..i}/Delta_{1..i-1} to the order.
  SeriesU prod = SeriesU::one(var, order);
  std::vector<long> idx;
  for (long i = 1; i <= n; ++i) {
    idx.push_back(i);
    prod = prod * D[i - 1];
    if (!series_equal_common(prod, M.minor(idx, idx)))
      throw Error("gauss_decompose: diagonal/minor mismatch");
  }
  return {F, D, E};
}

}  // namespace mvwb
