#pragma once

#include <utility>
#include <vector>

#include "mvwb/rational.hpp"

namespace mvwb {

// Multiset of rationals, stored as sorted runs (value, multiplicity).
// Values strictly increasing, multiplicities >= 1.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(const std::vector<Rational>& values);

  void add(const Rational& v, long mult = 1);

  long size() const;                      // total with multiplicity
  bool empty() const { return runs_.empty(); }
  long multiplicity(const Rational& v) const;
  bool contains(const Rational& v) const { return multiplicity(v) > 0; }

  Multiset shifted(const Rational& c) const;   // {v + c}
  Multiset united(const Multiset& o) const;    // multiplicities add
  bool submultiset_of(const Multiset& o) const;
  // Multiset difference; throws SizeMismatch unless o is a submultiset.
  Multiset minus(const Multiset& o) const;

  std::vector<Rational> values() const;   // expanded, ascending
  const std::vector<std::pair<Rational, long>>& runs() const { return runs_; }

  bool operator==(const Multiset& o) const { return runs_ == o.runs_; }
  bool operator!=(const Multiset& o) const { return !(*this == o); }
  bool operator<(const Multiset& o) const { return runs_ < o.runs_; }

  std::string str() const;   // "{a, b, b, c}"

 private:
  std::vector<std::pair<Rational, long>> runs_;
};

}  // namespace mvwb
