#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvwb/rational.hpp"
#include "mvwb/series.hpp"

namespace mvwb {

// Finitely supported Laurent polynomial (exact; both signs of exponent).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const Rational& c);
  static LaurentPoly term(long e, const Rational& c);

  bool is_zero() const { return c_.empty(); }
  Rational coeff(long e) const;
  void set(long e, const Rational& c);
  void add_term(long e, const Rational& c);
  long min_exp() const;  // throws on zero
  long max_exp() const;  // throws on zero
  const std::map<long, Rational>& terms() const { return c_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& s) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted_exp(long k) const;  // * t^k
  // p(-t): coefficient at e picks up (-1)^e.
  LaurentPoly negate_arg() const;

  // Exact quotient if o divides *this in the Laurent ring, else nullopt.
  std::optional<LaurentPoly> divided_exact(const LaurentPoly& o) const;

  std::string str(const std::string& var = "t") const;

 private:
  std::map<long, Rational> c_;
};

// Square matrix over LaurentPoly with exact minor arithmetic.
class LaurentMatrix {
 public:
  LaurentMatrix(long dim);
  static LaurentMatrix identity(long dim);

  long dim() const { return dim_; }
  LaurentPoly& at(long i, long j);              // 1-based
  const LaurentPoly& at(long i, long j) const;  // 1-based

  LaurentMatrix transpose() const;
  // Entrywise p(t) -> p(-u); used to form g(-u)^T.
  LaurentMatrix negate_arg() const;

  // Exact determinant of the (rows, cols) submatrix. Cofactor expansion for
  // dimension < 4, fraction-free (Bareiss) elimination above.
  LaurentPoly minor(const std::vector<long>& rows,
                    const std::vector<long>& cols) const;
  LaurentPoly det() const;

  SeriesMatrix to_series(long order) const;

 private:
  long dim_;
  std::vector<LaurentPoly> e_;
};

}  // namespace mvwb
