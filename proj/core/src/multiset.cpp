#include "mvwb/multiset.hpp"

#include <algorithm>

#include "mvwb/errors.hpp"

namespace mvwb {

Multiset::Multiset(const std::vector<Rational>& values) {
  for (const auto& v : values) add(v);
}

void Multiset::add(const Rational& v, long mult) {
  if (mult <= 0) throw SizeMismatch("multiplicity must be positive");
  auto it = std::lower_bound(
      runs_.begin(), runs_.end(), v,
      [](const auto& run, const Rational& x) { return run.first < x; });
  if (it != runs_.end() && it->first == v)
    it->second += mult;
  else
    runs_.insert(it, {v, mult});
}

long Multiset::size() const {
  long n = 0;
  for (const auto& [v, m] : runs_) n += m;
  return n;
}

long Multiset::multiplicity(const Rational& v) const {
  auto it = std::lower_bound(
      runs_.begin(), runs_.end(), v,
      [](const auto& run, const Rational& x) { return run.first < x; });
  return (it != runs_.end() && it->first == v) ? it->second : 0;
}

Multiset Multiset::shifted(const Rational& c) const {
  Multiset out;
  out.runs_.reserve(runs_.size());
  for (const auto& [v, m] : runs_) out.runs_.emplace_back(v + c, m);
  return out;
}

Multiset Multiset::united(const Multiset& o) const {
  Multiset out = *this;
  for (const auto& [v, m] : o.runs_) out.add(v, m);
  return out;
}

bool Multiset::submultiset_of(const Multiset& o) const {
  for (const auto& [v, m] : runs_)
    if (o.multiplicity(v) < m) return false;
  return true;
}

Multiset Multiset::minus(const Multiset& o) const {
  if (!o.submultiset_of(*this))
    throw SizeMismatch("minus: not a submultiset");
  Multiset out;
  for (const auto& [v, m] : runs_) {
    long rest = m - o.multiplicity(v);
    if (rest > 0) out.add(v, rest);
  }
  return out;
}

std::vector<Rational> Multiset::values() const {
  std::vector<Rational> out;
  for (const auto& [v, m] : runs_)
    for (long k = 0; k < m; ++k) out.push_back(v);
  return out;
}

std::string Multiset::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [v, m] : runs_)
    for (long k = 0; k < m; ++k) {
      if (!first) s += ", ";
      s += rational_str(v);
      first = false;
    }
  return s + "}";
}

}  // namespace mvwb
