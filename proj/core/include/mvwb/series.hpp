#pragma once

#include <string>
#include <vector>

#include "mvwb/rational.hpp"

namespace mvwb {

class LaurentPoly;

// Truncated series in descending powers of one variable ('u' or 't'):
//   c[0]*v^lead + c[1]*v^(lead-1) + ... + c[order]*v^(lead-order) + O(lower).
// Coefficients are exact down to exponent lead-order and unknown below;
// everything above lead is zero. Arithmetic tracks the largest window on
// which the result is exact, and reads below the window throw
// IndeterminateComparison.
class SeriesU {
 public:
  SeriesU() = default;
  SeriesU(char var, long lead, long order, std::vector<Rational> coeffs);
  static SeriesU zero(char var, long order) { return constant(var, 0, order); }
  static SeriesU one(char var, long order) { return constant(var, 1, order); }
  static SeriesU constant(char var, const Rational& c, long order);
  static SeriesU from_laurent(const LaurentPoly& p, char var, long order);

  char var() const { return var_; }
  long lead() const { return lead_; }
  long order() const { return order_; }
  long window_bottom() const { return lead_ - order_; }

  // Coefficient of v^e: zero above lead, exact inside the window, and
  // IndeterminateComparison below it.
  Rational coeff(long e) const;
  bool known_zero() const;  // all known coefficients vanish

  SeriesU operator+(const SeriesU& o) const;
  SeriesU operator-(const SeriesU& o) const;
  SeriesU operator*(const SeriesU& o) const;
  SeriesU operator*(const Rational& s) const;
  SeriesU operator-() const;

  // Multiplicative inverse; requires a nonzero known leading coefficient.
  SeriesU inverse() const;
  SeriesU operator/(const SeriesU& o) const { return *this * o.inverse(); }

  // Drop known leading zeros so lead() carries a nonzero coefficient.
  SeriesU stripped() const;
  SeriesU truncated(long order) const;

  std::string str() const;

 private:
  char var_ = 'u';
  long lead_ = 0;
  long order_ = 0;
  std::vector<Rational> c_;  // c_[k] = coeff of v^(lead_-k), size <= order_+1
  void check_var(const SeriesU& o) const;
};

// Exact equality of all coefficients with exponent >= max(lead)-k.
// Throws IndeterminateComparison if either window is too short.
bool series_equal_to_order(const SeriesU& a, const SeriesU& b, long k);

// Equality over the largest window both series know.
bool series_equal_common(const SeriesU& a, const SeriesU& b);

// Square matrix of series sharing one variable and truncation order.
class SeriesMatrix {
 public:
  SeriesMatrix(long dim, char var, long order);
  static SeriesMatrix identity(long dim, char var, long order);

  long dim() const { return dim_; }
  char var() const { return var_; }
  long order() const { return order_; }
  SeriesU& at(long i, long j);              // 1-based
  const SeriesU& at(long i, long j) const;  // 1-based

  SeriesMatrix operator*(const SeriesMatrix& o) const;

  // Determinant of the submatrix with the given 1-based rows/columns,
  // by cofactor expansion. Throws IndexOutOfRange.
  SeriesU minor(const std::vector<long>& rows,
                const std::vector<long>& cols) const;
  SeriesU det() const;

 private:
  long dim_;
  char var_;
  long order_;
  std::vector<SeriesU> e_;
};

struct GaussDecomposition {
  SeriesMatrix F;            // lower unitriangular
  std::vector<SeriesU> D;    // diagonal
  SeriesMatrix E;            // upper unitriangular
};

// M = F * D * E to the truncation order. Requires every leading principal
// minor to be a unit series (nonzero constant term); otherwise throws
// SingularPrincipalMinor. The diagonal is verified against principal-minor
// ratios D_i = Delta_{1..i}/Delta_{1..i-1} before returning.
GaussDecomposition gauss_decompose(const SeriesMatrix& M);

}  // namespace mvwb
