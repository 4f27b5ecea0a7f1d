#include "qabel/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qabel {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned p : parts_)
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

unsigned Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

bool Partition::has_repeated_part() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return true;
  return false;
}

unsigned Partition::multiplicity_of_largest() const {
  if (parts_.empty()) return 0;
  unsigned count = 0;
  while (count < parts_.size() && parts_[count] == parts_[0]) ++count;
  return count;
}

unsigned Partition::distinct_part_count() const {
  unsigned count = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (i == 0 || parts_[i] != parts_[i - 1]) ++count;
  return count;
}

std::vector<std::pair<unsigned, unsigned>> Partition::multiplicities() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<unsigned> conj(parts_[0], 0u);
  for (unsigned j = 0; j < parts_[0]; ++j) {
    unsigned count = 0;
    while (count < parts_.size() && parts_[count] > j) ++count;
    conj[j] = count;
  }
  return Partition(std::move(conj));
}

Partition Partition::adjoin(unsigned n) const {
  if (n == 0) throw std::invalid_argument("adjoin requires a positive part");
  std::vector<unsigned> parts = parts_;
  parts.push_back(n);
  return Partition(std::move(parts));
}

int mu_p(const std::vector<unsigned>& parts) {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] == parts[i - 1]) return 0;
  return (parts.size() % 2 == 0) ? 1 : -1;
}

int mu_p(const Partition& lambda) { return mu_p(lambda.parts()); }

PartitionStream::PartitionStream(unsigned n, unsigned min_part, bool distinct)
    : n_(n), min_part_(min_part), distinct_(distinct) {
  if (min_part == 0) throw std::invalid_argument("min_part must be >= 1");
  parts_.reserve(min_part > 0 ? n / min_part + 1 : n + 1);
}

// Depth-first: append the lexicographically largest completion of the current
// prefix; `remaining` is the sum still to place, `cap` the largest allowed part.
bool PartitionStream::descend(unsigned remaining, unsigned cap) {
  if (remaining == 0) return true;
  unsigned top = std::min(cap, remaining);
  for (unsigned v = top; v >= min_part_; --v) {
    parts_.push_back(v);
    if (descend(remaining - v, distinct_ ? v - 1 : v)) return true;
    parts_.pop_back();
    if (v == min_part_) break;  // unsigned wrap guard
  }
  return false;
}

bool PartitionStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ == 0) return true;  // the empty partition, exactly once
    if (descend(n_, n_)) return true;
    done_ = true;
    return false;
  }
  // Backtrack from the current partition to its decreasing-lex successor.
  unsigned remaining = 0;
  while (!parts_.empty()) {
    const unsigned v = parts_.back();
    parts_.pop_back();
    remaining += v;
    for (unsigned v2 = v - 1; v2 >= min_part_ && v2 > 0; --v2) {
      parts_.push_back(v2);
      if (descend(remaining - v2, distinct_ ? v2 - 1 : v2)) return true;
      parts_.pop_back();
    }
  }
  done_ = true;
  return false;
}

std::uint64_t count_partitions(unsigned n, unsigned min_part, bool distinct) {
  std::uint64_t count = 0;
  for_each_partition(n, min_part, distinct, [&](const std::vector<unsigned>&) { ++count; });
  return count;
}

}  // namespace qabel
