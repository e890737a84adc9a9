#include "mvwb/laurent.hpp"

#include <algorithm>

#include "mvwb/errors.hpp"

namespace mvwb {

LaurentPoly LaurentPoly::constant(const Rational& c) { return term(0, c); }

LaurentPoly LaurentPoly::term(long e, const Rational& c) {
  LaurentPoly p;
  p.set(e, c);
  return p;
}

Rational LaurentPoly::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set(long e, const Rational& c) {
  if (c == 0)
    c_.erase(e);
  else
    c_[e] = c;
}

void LaurentPoly::add_term(long e, const Rational& c) {
  auto it = c_.find(e);
  if (it == c_.end()) {
    if (c != 0) c_[e] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) c_.erase(it);
}

long LaurentPoly::min_exp() const {
  if (c_.empty()) throw IndexOutOfRange("min_exp of zero");
  return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (c_.empty()) throw IndexOutOfRange("max_exp of zero");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, v] : o.c_) r.add_term(e, v);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, v] : o.c_) r.add_term(e, -v);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (const auto& [e, v] : c_) r.c_[e] = v * s;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

LaurentPoly LaurentPoly::shifted_exp(long k) const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

LaurentPoly LaurentPoly::negate_arg() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = (e % 2 == 0) ? v : -v;
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divided_exact(
    const LaurentPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly();
  // Pull off t-powers so both operands are polynomials with nonzero constant
  // term; then divisibility is ordinary polynomial divisibility.
  long a0 = min_exp(), b0 = o.min_exp();
  LaurentPoly rem = shifted_exp(-a0);
  LaurentPoly div = o.shifted_exp(-b0);
  long lead_e = div.max_exp();
  const Rational lead_c = div.coeff(lead_e);
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= lead_e) {
    long e = rem.max_exp();
    Rational q = rem.coeff(e) / lead_c;
    quot.add_term(e - lead_e, q);
    rem = rem - div * LaurentPoly::term(e - lead_e, q);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted_exp(a0 - b0);
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += rational_str(it->second);
    if (it->first != 0) s += "*" + var + "^" + std::to_string(it->first);
  }
  return s;
}

LaurentMatrix::LaurentMatrix(long dim) : dim_(dim), e_(dim * dim) {}

LaurentMatrix LaurentMatrix::identity(long dim) {
  LaurentMatrix m(dim);
  for (long i = 1; i <= dim; ++i) m.at(i, i) = LaurentPoly::constant(1);
  return m;
}

LaurentPoly& LaurentMatrix::at(long i, long j) {
  if (i < 1 || i > dim_ || j < 1 || j > dim_)
    throw IndexOutOfRange("laurent matrix entry");
  return e_[(i - 1) * dim_ + (j - 1)];
}

const LaurentPoly& LaurentMatrix::at(long i, long j) const {
  return const_cast<LaurentMatrix*>(this)->at(i, j);
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix m(dim_);
  for (long i = 1; i <= dim_; ++i)
    for (long j = 1; j <= dim_; ++j) m.at(i, j) = at(j, i);
  return m;
}

LaurentMatrix LaurentMatrix::negate_arg() const {
  LaurentMatrix m(dim_);
  for (long i = 1; i <= dim_; ++i)
    for (long j = 1; j <= dim_; ++j) m.at(i, j) = at(i, j).negate_arg();
  return m;
}

static LaurentPoly det_cofactor(const LaurentMatrix& m,
                                const std::vector<long>& rows,
                                const std::vector<long>& cols) {
  size_t k = rows.size();
  if (k == 0) return LaurentPoly::constant(1);
  if (k == 1) return m.at(rows[0], cols[0]);
  LaurentPoly acc;
  std::vector<long> subrows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    const LaurentPoly& head = m.at(rows[0], cols[j]);
    if (head.is_zero()) continue;
    std::vector<long> subcols;
    for (size_t l = 0; l < k; ++l)
      if (l != j) subcols.push_back(cols[l]);
    LaurentPoly term = head * det_cofactor(m, subrows, subcols);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Bareiss fraction-free elimination; divisions are exact in the Laurent ring.
static LaurentPoly det_bareiss(const LaurentMatrix& m,
                               const std::vector<long>& rows,
                               const std::vector<long>& cols) {
  long k = static_cast<long>(rows.size());
  std::vector<LaurentPoly> a(k * k);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) a[i * k + j] = m.at(rows[i], cols[j]);
  LaurentPoly prev = LaurentPoly::constant(1);
  long sign = 1;
  for (long p = 0; p < k - 1; ++p) {
    if (a[p * k + p].is_zero()) {
      long swap = -1;
      for (long i = p + 1; i < k; ++i)
        if (!a[i * k + p].is_zero()) { swap = i; break; }
      if (swap < 0) return LaurentPoly();
      for (long j = 0; j < k; ++j) std::swap(a[p * k + j], a[swap * k + j]);
      sign = -sign;
    }
    for (long i = p + 1; i < k; ++i)
      for (long j = p + 1; j < k; ++j) {
        LaurentPoly num =
            a[i * k + j] * a[p * k + p] - a[i * k + p] * a[p * k + j];
        auto q = num.divided_exact(prev);
        if (!q) throw Error("bareiss: non-exact division");
        a[i * k + j] = *q;
      }
    prev = a[p * k + p];
  }
  LaurentPoly d = a[(k - 1) * k + (k - 1)];
  return sign > 0 ? d : -d;
}

LaurentPoly LaurentMatrix::minor(const std::vector<long>& rows,
                                 const std::vector<long>& cols) const {
  if (rows.size() != cols.size())
    throw IndexOutOfRange("minor needs |rows| == |cols|");
  for (long r : rows)
    if (r < 1 || r > dim_) throw IndexOutOfRange("minor row index");
  for (long c : cols)
    if (c < 1 || c > dim_) throw IndexOutOfRange("minor column index");
  if (rows.size() < 4) return det_cofactor(*this, rows, cols);
  return det_bareiss(*this, rows, cols);
}

LaurentPoly LaurentMatrix::det() const {
  std::vector<long> all(dim_);
  for (long i = 0; i < dim_; ++i) all[i] = i + 1;
  return minor(all, all);
}

SeriesMatrix LaurentMatrix::to_series(long order) const {
  SeriesMatrix m(dim_, 'u', order);
  for (long i = 1; i <= dim_; ++i)
    for (long j = 1; j <= dim_; ++j)
      m.at(i, j) = SeriesU::from_laurent(at(i, j), 'u', order);
  return m;
}

}  // namespace mvwb
