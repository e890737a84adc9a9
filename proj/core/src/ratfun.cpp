#include "mvwb/ratfun.hpp"

#include "mvwb/errors.hpp"

namespace mvwb {

RationalFunctionU::RationalFunctionU(PolyU num, PolyU den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function");
  Rational lc = den_.leading();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunctionU RationalFunctionU::operator*(
    const RationalFunctionU& o) const {
  return RationalFunctionU(num_ * o.num_, den_ * o.den_);
}

RationalFunctionU RationalFunctionU::operator/(
    const RationalFunctionU& o) const {
  if (o.num_.is_zero()) throw ZeroDenominator("division by zero function");
  return RationalFunctionU(num_ * o.den_, den_ * o.num_);
}

RationalFunctionU RationalFunctionU::operator+(
    const RationalFunctionU& o) const {
  return RationalFunctionU(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionU RationalFunctionU::operator-(
    const RationalFunctionU& o) const {
  return RationalFunctionU(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunctionU RationalFunctionU::reciprocal() const {
  if (num_.is_zero()) throw ZeroDenominator("reciprocal of zero");
  return RationalFunctionU(den_, num_);
}

RationalFunctionU RationalFunctionU::pow(long k) const {
  RationalFunctionU base = k >= 0 ? *this : reciprocal();
  long e = k >= 0 ? k : -k;
  RationalFunctionU acc = one();
  for (long i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

bool RationalFunctionU::operator==(const RationalFunctionU& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunctionU::str(const std::string& var) const {
  if (den_ == PolyU::constant(1)) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalFunctionU RationalFunctionU::shift_arg(const Rational& c) const {
  return RationalFunctionU(num_.shift_arg(c), den_.shift_arg(c));
}

RationalFunctionU RationalFunctionU::negate_arg() const {
  return RationalFunctionU(num_.negate_arg(), den_.negate_arg());
}

SeriesU RationalFunctionU::expand(long order, char var) const {
  if (num_.is_zero()) return SeriesU::zero(var, order);
  long dn = num_.deg(), dd = den_.deg();
  long lead = dn - dd;
  // Descending power series division: walk exponents from the top.
  std::vector<Rational> out(order + 1, Rational(0));
  std::vector<Rational> rem(order + 1, Rational(0));  // rem[k] ~ u^(dn-k)
  for (long k = 0; k <= order; ++k) rem[k] = num_.coeff(dn - k);
  const Rational lc = den_.coeff(dd);  // monic, but keep it general
  for (long k = 0; k <= order; ++k) {
    Rational q = rem[k] / lc;
    out[k] = q;
    if (q == 0) continue;
    for (long j = 0; j <= order - k; ++j) {
      // subtract q*u^(lead-k) * den: hits exponent dn-k-j via den coeff dd-j
      rem[k + j] -= q * den_.coeff(dd - j);
    }
  }
  return SeriesU(var, lead, order, std::move(out));
}

SeriesU rf_expand(const RationalFunctionU& f, long order) {
  return f.expand(order);
}

RationalFunctionU rf_shift(const RationalFunctionU& f, const Rational& c) {
  return f.shift_arg(c);
}

RationalFunctionU rf_negate_arg(const RationalFunctionU& f) {
  return f.negate_arg();
}

}  // namespace mvwb
