#ifndef CLONEDUAL_CLONE_ALGEBRA_HPP
#define CLONEDUAL_CLONE_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "clonedual/finspace.hpp"
#include "clonedual/partition.hpp"

namespace clonedual {

// An element of a finite-index power of the label alphabet: a function from
// {0, ..., index_size - 1} into the naturals.  The naturals stand in for the
// infinite label alphabet; only finitely many occur in any one labeling.
class Labeling {
 public:
  explicit Labeling(std::vector<std::uint64_t> labels)
      : labels_(std::move(labels)) {}

  std::size_t index_size() const { return labels_.size(); }
  std::uint64_t operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<std::uint64_t>& labels() const { return labels_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<std::uint64_t> labels_;
};

// Partition of the index set grouping equal labels.
Partition kernel(const Labeling& ell);

// A finite fragment of a function on the label alphabet.  Tuples absent from
// `entries` fall back to the default rule: either a constant, or a fresh
// label per unseen tuple.  Fresh labels are deterministic: the smallest
// naturals not occurring anywhere in the inputs or the entries, allocated in
// tuple-lexicographic order.
struct OpTable {
  std::size_t arity = 1;
  std::map<std::vector<std::uint64_t>, std::uint64_t> entries;
  // nullopt = fresh per unseen tuple.
  std::optional<std::uint64_t> constant_default;
};

// Copy of `op` with entries added for every tuple the arguments touch, fresh
// values allocated by the deterministic rule above.  Applying the extended
// table is pure lookup, so one materialized fragment can be reused across
// several applications as a single fixed function.
OpTable extend_for(const OpTable& op, const std::vector<Labeling>& args);

// Pointwise application.  Requires args.size() == op.arity and equal index
// sizes.  Positions carrying equal argument tuples receive equal labels, so
// the meet of the argument kernels refines the result kernel.
Labeling apply_op(const OpTable& op, const std::vector<Labeling>& args);

// The canonical injective tuple encoding (iterated diagonal pairing on the
// naturals).  The kernel of the result is exactly the meet of the argument
// kernels.
Labeling pair_inject(const std::vector<Labeling>& args);

// A finite-index partitionable algebra, determined by its finest realized
// kernel: a labeling is a member iff finest_kernel refines its kernel.
class FinAlgebra {
 public:
  FinAlgebra(std::size_t index_size, Partition finest_kernel);

  std::size_t index_size() const { return index_size_; }
  const Partition& finest_kernel() const { return finest_kernel_; }
  std::size_t block_count() const { return finest_kernel_.block_count(); }

  friend bool operator==(const FinAlgebra&, const FinAlgebra&) = default;

 private:
  std::size_t index_size_;
  Partition finest_kernel_;
};

// Algebra generated by the given labelings: finest kernel = meet of their
// kernels.
FinAlgebra generate(std::size_t index_size, const std::vector<Labeling>& gens);

bool contains(const FinAlgebra& algebra, const Labeling& ell);

// The spectrum as a finite uniform space: one point per finest-kernel block,
// with the discrete uniformity (generated by the agreement relation of any
// block-separating member).  Separated, complete, discrete.
FinSpace spectrum(const FinAlgebra& algebra);

// A point of the spectrum: evaluation on one finest-kernel block.
class SpectrumPoint {
 public:
  SpectrumPoint(FinAlgebra algebra, std::size_t block);

  const FinAlgebra& algebra() const { return algebra_; }
  std::size_t block() const { return block_; }

  friend bool operator==(const SpectrumPoint&, const SpectrumPoint&) = default;

 private:
  FinAlgebra algebra_;
  std::size_t block_;
};

// The common label of a member on the point's block.
std::uint64_t evaluate(const SpectrumPoint& phi, const Labeling& ell);
std::uint64_t evaluate(const FinAlgebra& algebra, std::size_t block,
                       const Labeling& ell);

// A partitionable congruence: two members are related iff they agree on
// every supported block.  Empty support is the total congruence.
class PartCongruence {
 public:
  PartCongruence(FinAlgebra algebra, std::vector<std::size_t> support);

  const FinAlgebra& algebra() const { return algebra_; }
  const std::vector<std::size_t>& support() const { return support_; }

  friend bool operator==(const PartCongruence&, const PartCongruence&) = default;

 private:
  FinAlgebra algebra_;
  std::vector<std::size_t> support_;  // sorted, unique block ids
};

bool congruence_kernel_pairs(const PartCongruence& theta, const Labeling& ell,
                             const Labeling& em);

// Member whose value on block b is block_values[b].
Labeling member_from_block_values(const FinAlgebra& algebra,
                                  const std::vector<std::uint64_t>& block_values);

// Values of a member per finest-kernel block.
std::vector<std::uint64_t> block_values_of(const FinAlgebra& algebra,
                                           const Labeling& member);

// All members with labels below `alphabet`, in lexicographic order of their
// block-value vectors.
std::vector<Labeling> members_over_alphabet(const FinAlgebra& algebra,
                                            std::uint64_t alphabet);

}  // namespace clonedual

#endif
