#include "mvwb/partition.hpp"

#include <algorithm>
#include <functional>

#include "mvwb/errors.hpp"

namespace mvwb {

Partition::Partition(std::vector<long> parts) {
  for (long p : parts)
    if (p < 0) throw SizeMismatch("negative part");
  std::sort(parts.begin(), parts.end(), std::greater<long>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
  total_ = 0;
  for (long p : parts_) total_ += p;
}

long Partition::part(long k) const {
  if (k < 1) throw IndexOutOfRange("partition part index");
  return k <= num_parts() ? parts_[k - 1] : 0;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition partition_transpose(const Partition& p) {
  std::vector<long> t;
  long rows = p.num_parts();
  for (long c = 1; c <= p.part(1); ++c) {
    long h = 0;
    for (long r = 1; r <= rows; ++r)
      if (p.part(r) >= c) ++h;
    t.push_back(h);
  }
  return Partition(t);
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.total() != b.total())
    throw SizeMismatch("dominance on different totals");
  long sa = 0, sb = 0;
  long k = std::max(a.num_parts(), b.num_parts());
  for (long i = 1; i <= k; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

static void gen_partitions(long n, long maxpart, std::vector<long>& acc,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (long p = std::min(n, maxpart); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}

std::vector<Partition> partitions_of(long n) {
  std::vector<Partition> out;
  std::vector<long> acc;
  gen_partitions(n, n, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

static void gen_box(long rows, long cols, long maxpart, std::vector<long>& acc,
                    std::vector<Partition>& out) {
  out.emplace_back(acc);
  if (static_cast<long>(acc.size()) == rows) return;
  for (long p = 1; p <= maxpart; ++p) {
    acc.push_back(p);
    gen_box(rows, cols, p, acc, out);
    acc.pop_back();
  }
}

std::vector<Partition> partitions_in_box(long rows, long cols) {
  std::vector<Partition> out;
  if (rows < 0 || cols < 0) throw SizeMismatch("negative box");
  std::vector<long> acc;
  gen_box(rows, cols, cols, acc, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mvwb
