#pragma once

#include <string>
#include <vector>

#include "mvwb/multiset.hpp"
#include "mvwb/rational.hpp"

namespace mvwb {

// Dense univariate polynomial over Rational, ascending coefficients,
// trailing zeros stripped. The zero polynomial has degree -1.
class PolyU {
 public:
  PolyU() = default;
  explicit PolyU(std::vector<Rational> coeffs);
  static PolyU constant(const Rational& c);
  static PolyU monomial(long k, const Rational& c = 1);  // c * u^k
  // prod_{v in roots} (u - v/2), the standard parameter polynomial.
  static PolyU from_parameters(const Multiset& roots);
  // prod_{v in roots} (u - v).
  static PolyU from_roots(const Multiset& roots);

  long deg() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(long k) const;  // 0 outside range
  Rational leading() const;             // 0 for the zero polynomial
  bool is_monic() const;
  Rational eval(const Rational& x) const;

  PolyU operator+(const PolyU& o) const;
  PolyU operator-(const PolyU& o) const;
  PolyU operator*(const PolyU& o) const;
  PolyU operator*(const Rational& s) const;
  PolyU operator-() const;
  bool operator==(const PolyU& o) const { return c_ == o.c_; }
  bool operator!=(const PolyU& o) const { return !(*this == o); }

  PolyU pow(long k) const;
  PolyU shift_arg(const Rational& c) const;  // p(u + c)
  PolyU negate_arg() const;                  // p(-u)

  std::string str(const std::string& var = "u") const;

 private:
  std::vector<Rational> c_;
  void strip();
};

}  // namespace mvwb
