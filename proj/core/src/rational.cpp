#include "mvwb/rational.hpp"

#include "mvwb/errors.hpp"

namespace mvwb {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw ZeroDenominator(s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("parse_rational: bad literal '" + s + "'");
  }
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

long rational_to_long(const Rational& r) {
  if (!is_integer(r)) throw SizeMismatch("not an integer: " + rational_str(r));
  return static_cast<long>(numerator(r));
}

}  // namespace mvwb
