#pragma once

#include <cstdint>
#include <vector>

namespace qabel {

// An integer partition: parts stored weakly decreasing, empty vector is the
// empty partition. Immutable after construction; cheap to copy and safe to
// share across threads.
class Partition {
 public:
  Partition() = default;
  // Accepts parts in any order; sorts them weakly decreasing. Rejects zero parts.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const;                 // |lambda|, sum of parts
  unsigned length() const { return static_cast<unsigned>(parts_.size()); }
  unsigned smallest() const { return parts_.empty() ? 0u : parts_.back(); }
  unsigned largest() const { return parts_.empty() ? 0u : parts_.front(); }
  bool has_repeated_part() const;
  unsigned multiplicity_of_largest() const;
  unsigned distinct_part_count() const;

  // Part multiplicities as (part, count), parts decreasing.
  std::vector<std::pair<unsigned, unsigned>> multiplicities() const;

  // Young-diagram transpose; involution, preserves size, swaps length and
  // largest part.
  Partition conjugate() const;

  // Multiset union with one extra part n (n >= 1).
  Partition adjoin(unsigned n) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

 private:
  std::vector<unsigned> parts_;
};

// Partition-theoretic Moebius function: 0 when a part repeats, otherwise
// (-1)^length. mu_p of the empty partition is 1.
int mu_p(const Partition& lambda);
int mu_p(const std::vector<unsigned>& parts);

// Lazy stream over the partitions of n in decreasing-lexicographic order of
// the part lists, optionally restricted to parts >= min_part or to distinct
// parts. Constant memory: the internal part buffer is reused between steps.
// Single consumer; copyable only before the first advance().
class PartitionStream {
 public:
  explicit PartitionStream(unsigned n, unsigned min_part = 1, bool distinct = false);

  // Moves to the next partition; false when exhausted. The parts() buffer is
  // valid until the next call.
  bool advance();
  const std::vector<unsigned>& parts() const { return parts_; }
  Partition current() const { return Partition(parts_); }

 private:
  bool descend(unsigned remaining, unsigned cap);
  unsigned n_ = 0;
  unsigned min_part_ = 1;
  bool distinct_ = false;
  bool started_ = false;
  bool done_ = false;
  std::vector<unsigned> parts_;
};

// Convenience driver: f(parts) for every partition of n, decreasing-lex order.
template <typename F>
void for_each_partition(unsigned n, unsigned min_part, bool distinct, F&& f) {
  PartitionStream stream(n, min_part, distinct);
  while (stream.advance()) f(stream.parts());
}

// Number of partitions of n, by streaming; test-friendly and intentionally
// independent of any generating-function machinery.
std::uint64_t count_partitions(unsigned n, unsigned min_part = 1, bool distinct = false);

}  // namespace qabel
