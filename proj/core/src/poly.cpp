#include "mvwb/poly.hpp"

#include "mvwb/errors.hpp"

namespace mvwb {

namespace {
const Rational kZero = 0;
}

PolyU::PolyU(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

void PolyU::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyU PolyU::constant(const Rational& c) { return PolyU({c}); }

PolyU PolyU::monomial(long k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return PolyU(std::move(v));
}

PolyU PolyU::from_parameters(const Multiset& roots) {
  PolyU p = constant(1);
  for (const auto& [v, m] : roots.runs()) {
    PolyU lin({-v / 2, Rational(1)});
    for (long k = 0; k < m; ++k) p = p * lin;
  }
  return p;
}

PolyU PolyU::from_roots(const Multiset& roots) {
  PolyU p = constant(1);
  for (const auto& [v, m] : roots.runs()) {
    PolyU lin({-v, Rational(1)});
    for (long k = 0; k < m; ++k) p = p * lin;
  }
  return p;
}

const Rational& PolyU::coeff(long k) const {
  if (k < 0 || k > deg()) return kZero;
  return c_[k];
}

Rational PolyU::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

bool PolyU::is_monic() const { return !c_.empty() && c_.back() == 1; }

Rational PolyU::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyU PolyU::operator+(const PolyU& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return PolyU(std::move(v));
}

PolyU PolyU::operator-(const PolyU& o) const { return *this + (-o); }

PolyU PolyU::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x = -x;
  return PolyU(std::move(v));
}

PolyU PolyU::operator*(const PolyU& o) const {
  if (is_zero() || o.is_zero()) return PolyU();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return PolyU(std::move(v));
}

PolyU PolyU::operator*(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return PolyU(std::move(v));
}

PolyU PolyU::pow(long k) const {
  if (k < 0) throw IndexOutOfRange("negative polynomial power");
  PolyU acc = constant(1);
  for (long i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

PolyU PolyU::shift_arg(const Rational& c) const {
  // Horner: p(u+c) = (...((a_n)(u+c) + a_{n-1})(u+c) + ...) + a_0.
  PolyU acc;
  PolyU lin({c, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * lin + constant(*it);
  return acc;
}

PolyU PolyU::negate_arg() const {
  std::vector<Rational> v = c_;
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return PolyU(std::move(v));
}

std::string PolyU::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (long k = deg(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0 || c_[k] != 1) s += rational_str(c_[k]);
    if (k > 0) {
      if (c_[k] != 1) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace mvwb
