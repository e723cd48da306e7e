#ifndef CLONEDUAL_PARTITION_HPP
#define CLONEDUAL_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace clonedual {

// A partition of {0, ..., ground_size - 1} in canonical form.
//
// Canonical form: block ids are contiguous from 0 and the first occurrence of
// block i precedes the first occurrence of block i + 1.  Two set-partitions
// are equal iff their canonical block-id sequences are identical, so equality
// is plain vector comparison.  The empty ground set carries the unique empty
// partition (zero blocks).  Instances are immutable after construction.
class Partition {
 public:
  // Groups elements carrying equal labels; the labels themselves are
  // forgotten during canonicalization.
  template <typename Int>
  static Partition from_labels(const std::vector<Int>& raw) {
    Partition p;
    p.block_id_.resize(raw.size());
    std::unordered_map<Int, std::size_t> seen;
    seen.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto [it, inserted] = seen.emplace(raw[i], seen.size());
      p.block_id_[i] = it->second;
    }
    p.block_count_ = seen.size();
    return p;
  }

  static Partition from_block_ids(const std::vector<std::size_t>& raw) {
    return from_labels(raw);
  }

  // Every element alone.
  static Partition discrete(std::size_t n);
  // One block (zero blocks when n = 0).
  static Partition coarsest(std::size_t n);

  std::size_t ground_size() const { return block_id_.size(); }
  std::size_t block_count() const { return block_count_; }
  std::size_t block_of(std::size_t element) const { return block_id_[element]; }
  const std::vector<std::size_t>& block_ids() const { return block_id_; }

  bool is_discrete() const { return block_count_ == block_id_.size(); }

  // Members of each block in increasing order, blocks in canonical order.
  std::vector<std::vector<std::size_t>> blocks() const;

  // First element of each block (the canonical representative).
  std::vector<std::size_t> block_representatives() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition() = default;

  std::vector<std::size_t> block_id_;
  std::size_t block_count_ = 0;
};

// Coarsest partition refining both (greatest lower bound in the order where
// finer is smaller).  Throws SizeMismatchError on unequal ground sizes.
Partition meet(const Partition& p, const Partition& q);

// Finest partition coarsened by both: connected components of the union of
// the two equivalence relations.
Partition join(const Partition& p, const Partition& q);

// True iff every p-block is contained in some q-block.
bool refines(const Partition& p, const Partition& q);

std::size_t block_count(const Partition& p);

// Partition of the domain of `values` grouping x by the q-block of values[x].
Partition pullback(const Partition& q, const std::vector<std::size_t>& values);

// Partition induced on the listed elements (strictly increasing indices).
Partition restrict_to(const Partition& p, const std::vector<std::size_t>& points);

// Human-readable block form, e.g. {{0,1},{2}}.
std::string to_string(const Partition& p);

}  // namespace clonedual

#endif
