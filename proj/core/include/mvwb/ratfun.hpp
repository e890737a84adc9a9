#pragma once

#include <string>

#include "mvwb/poly.hpp"
#include "mvwb/series.hpp"

namespace mvwb {

// Rational function in one variable, numerator/denominator representation.
// Denominator is normalized monic; the fraction is not reduced. Equality is
// decided by cross-multiplication, never by expansion.
class RationalFunctionU {
 public:
  RationalFunctionU() : num_(PolyU::constant(0)), den_(PolyU::constant(1)) {}
  RationalFunctionU(PolyU num, PolyU den);
  static RationalFunctionU from_poly(const PolyU& p) {
    return RationalFunctionU(p, PolyU::constant(1));
  }
  static RationalFunctionU constant(const Rational& c) {
    return from_poly(PolyU::constant(c));
  }
  static RationalFunctionU one() { return constant(1); }

  const PolyU& num() const { return num_; }
  const PolyU& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunctionU operator*(const RationalFunctionU& o) const;
  RationalFunctionU operator/(const RationalFunctionU& o) const;
  RationalFunctionU operator+(const RationalFunctionU& o) const;
  RationalFunctionU operator-(const RationalFunctionU& o) const;
  RationalFunctionU reciprocal() const;
  RationalFunctionU pow(long k) const;  // k may be negative

  bool operator==(const RationalFunctionU& o) const;
  bool operator!=(const RationalFunctionU& o) const { return !(*this == o); }

  std::string str(const std::string& var = "u") const;

  RationalFunctionU shift_arg(const Rational& c) const;  // f(u + c)
  RationalFunctionU negate_arg() const;                  // f(-u)

  // Expansion in descending powers of the variable, exact to `order` terms
  // past the leading exponent deg(num) - deg(den).
  SeriesU expand(long order, char var = 'u') const;

 private:
  PolyU num_, den_;
};

// Spec-surface aliases for the series-ring operations.
SeriesU rf_expand(const RationalFunctionU& f, long order);
RationalFunctionU rf_shift(const RationalFunctionU& f, const Rational& c);
RationalFunctionU rf_negate_arg(const RationalFunctionU& f);

}  // namespace mvwb
