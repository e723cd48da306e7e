#ifndef CLONEDUAL_FINSPACE_HPP
#define CLONEDUAL_FINSPACE_HPP

#include <cstddef>
#include <vector>

#include "clonedual/partition.hpp"

namespace clonedual {

// A finitely presented non-Archimedean uniform space: a point set
// {0, ..., point_count - 1} together with a nonempty list of generating
// partitions.  The uniform equivalence relations of the presentation are
// exactly the coarsenings of the meet of the generators, so the meet (the
// finest uniform partition) is cached at construction.
class FinSpace {
 public:
  FinSpace(std::size_t point_count, std::vector<Partition> generators);

  std::size_t point_count() const { return point_count_; }
  const std::vector<Partition>& generators() const { return generators_; }
  const Partition& finest() const { return finest_; }

  friend bool operator==(const FinSpace&, const FinSpace&) = default;

 private:
  std::size_t point_count_;
  std::vector<Partition> generators_;
  Partition finest_;
};

// A uniformly continuous point map between finite presentations.  The
// constructor validates uniform continuity (the finest partition of the
// source refines the pullback of every target generator) and throws
// NotUniformError naming the first violated generator otherwise.
class UniformMap {
 public:
  UniformMap(FinSpace source, FinSpace target, std::vector<std::size_t> values);

  const FinSpace& source() const { return source_; }
  const FinSpace& target() const { return target_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t x) const { return values_[x]; }

  friend bool operator==(const UniformMap&, const UniformMap&) = default;

 private:
  FinSpace source_;
  FinSpace target_;
  std::vector<std::size_t> values_;
};

const Partition& finest_uniform_partition(const FinSpace& x);

// Separated = the finest uniform partition is discrete.  Finite presentations
// are complete once separated, so this doubles as the completeness test.
bool is_separated(const FinSpace& x);

// True iff every uniform partition has fewer than `bound` blocks, i.e. the
// finest one does.  Requires bound >= 1.
bool is_totally_bounded_below(const FinSpace& x, std::size_t bound);

struct Quotient {
  FinSpace space;
  UniformMap map;
};

// Collapse the blocks of the finest uniform partition; push the generators
// forward.  The result is separated (= the completion of the presentation)
// and the map is the uniformly continuous surjection onto it.
Quotient separated_quotient(const FinSpace& x);

// Validation gate: returns the map as a UniformMap or throws.
UniformMap check_uniform(const std::vector<std::size_t>& values,
                         const FinSpace& source, const FinSpace& target);

// Binary product with row-major point indexing ((x, y) -> x * |Y| + y) and
// the pullbacks of both factors' generators.
FinSpace product(const FinSpace& x, const FinSpace& y);

// Subspace on a nonempty strictly increasing list of points; generators are
// restricted and recanonicalized.
FinSpace subspace(const FinSpace& x, const std::vector<std::size_t>& points);

// f followed by g.
UniformMap compose(const UniformMap& f, const UniformMap& g);

UniformMap identity_map(const FinSpace& x);

// Dense image = the image meets every block of every generator partition of
// the target (on finite presentations this is surjectivity onto blocks).
bool has_dense_image(const UniformMap& f);

// Same point set and same finest uniform partition: the two presentations
// generate one uniformity.
bool same_uniformity(const FinSpace& x, const FinSpace& y);

// Uniform homeomorphy of finite presentations: some bijection matches the
// finest blocks of one to the finest blocks of the other, which reduces to
// equality of the sorted block-size multisets.
bool uniformly_homeomorphic(const FinSpace& x, const FinSpace& y);

}  // namespace clonedual

#endif
