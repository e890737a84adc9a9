#pragma once

#include <string>
#include <vector>

namespace mvwb {

// Integer partition in canonical form: non-increasing positive parts.
// Zero parts in the input are dropped; the total is kept explicitly.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  long total() const { return total_; }
  long num_parts() const { return static_cast<long>(parts_.size()); }
  long part(long k) const;  // 1-based; 0 beyond the last part
  const std::vector<long>& parts() const { return parts_; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const;  // "(3,1,1)"

 private:
  std::vector<long> parts_;
  long total_ = 0;
};

// Conjugate diagram. Involutive.
Partition partition_transpose(const Partition& p);

// True iff every partial sum of a is <= the one of b. Throws SizeMismatch
// when the totals differ.
bool dominance_leq(const Partition& a, const Partition& b);

// All partitions of n (n >= 0), lexicographically by part vector.
std::vector<Partition> partitions_of(long n);

// All partitions fitting in a box with at most `rows` parts, each <= `cols`,
// ordered lexicographically by part vector (empty partition first).
std::vector<Partition> partitions_in_box(long rows, long cols);

}  // namespace mvwb
