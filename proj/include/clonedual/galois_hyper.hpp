#ifndef CLONEDUAL_GALOIS_HYPER_HPP
#define CLONEDUAL_GALOIS_HYPER_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "clonedual/clone_algebra.hpp"
#include "clonedual/finspace.hpp"

namespace clonedual {

// A finite set of member pairs of an algebra, the input side of the Galois
// map f.
class PairSet {
 public:
  PairSet(FinAlgebra algebra, std::vector<std::pair<Labeling, Labeling>> pairs);

  const FinAlgebra& algebra() const { return algebra_; }
  const std::vector<std::pair<Labeling, Labeling>>& pairs() const {
    return pairs_;
  }

 private:
  FinAlgebra algebra_;
  std::vector<std::pair<Labeling, Labeling>> pairs_;
};

// A closed subset of a finite spectrum.  On finite discrete spectra every
// subset is closed; the type keeps the interface shared with tower-side
// closed sets.
class ClosedSet {
 public:
  ClosedSet(FinSpace space, std::vector<std::size_t> points);

  const FinSpace& space() const { return space_; }
  const std::vector<std::size_t>& points() const { return points_; }

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;

 private:
  FinSpace space_;
  std::vector<std::size_t> points_;  // sorted, unique
};

// f(R): the spectrum points whose kernel contains every pair of R.
ClosedSet galois_f(const PairSet& r);

// f applied to a partitionable congruence, computed by witness search: a
// point stays out iff some member pair related by the congruence separates
// it.
ClosedSet galois_f(const PartCongruence& theta);

// g(S): the intersection of the kernels of the points of S, which is the
// agreement-on-S congruence.
PartCongruence galois_g(const ClosedSet& s, const FinAlgebra& algebra);

// C = g o f on pair sets.
PartCongruence closure_C(const PairSet& r);

// D = f o g on closed sets; equals the topological closure induced by the
// spectrum uniformity.
ClosedSet closure_D(const ClosedSet& s, const FinAlgebra& algebra);

// The hyperspace: one point per nonempty subset of X (canonical binary
// indexing: the subset with characteristic bitmask m is point m - 1), one
// generator per generator E of X grouping subsets by the set of E-blocks
// they meet, together with the generator induced by the finest uniform
// partition when that is not already listed (the uniformity contains the
// meet of its generators, so the hyperspace presentation must too).
FinSpace hyperspace(const FinSpace& x);

// Supercompleteness presumes separation; on finite presentations a separated
// space is complete and so is its hyperspace.
bool is_supercomplete(const FinSpace& x);

// Exhaustive desk-scale verification that the restricted Galois maps are
// mutually inverse uniform homeomorphisms between partitionable congruences
// and closed sets: (i) f* and g* invert each other on all subsets including
// the empty set, and (ii) for every member over a 3-label alphabet and every
// pair of closed sets, entourage relatedness in the hyperspace, equality of
// value sets, and equality of the congruences restricted to the generated
// subalgebra all coincide.
bool check_pc_h_homeo(const FinAlgebra& algebra);

// Entourage of the hyperspace induced by agreement at `ell`: C and D are
// related iff each is covered by the agreement-neighborhoods of the other.
bool hyper_entourage_related(const FinAlgebra& algebra,
                             const std::vector<std::size_t>& c,
                             const std::vector<std::size_t>& d,
                             const Labeling& ell);

// Restriction of a congruence to the subalgebra generated by `ell` (the
// members factoring through ker(ell)); the result lives on that subalgebra.
PartCongruence restrict_to_generated(const PartCongruence& theta,
                                     const Labeling& ell);

// Decides {a} = {b} as sets through the function-pair criterion: every pair
// f, g from a finite sufficient family satisfies
// (for all i, f(a_i) = g(a_i)) iff (for all j, f(b_j) = g(b_j)).
bool set_equality_by_functions(const std::vector<std::uint64_t>& a,
                               const std::vector<std::uint64_t>& b);

}  // namespace clonedual

#endif
