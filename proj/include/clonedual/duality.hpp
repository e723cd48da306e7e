#ifndef CLONEDUAL_DUALITY_HPP
#define CLONEDUAL_DUALITY_HPP

#include <cstddef>
#include <vector>

#include "clonedual/clone_algebra.hpp"
#include "clonedual/finspace.hpp"

namespace clonedual {

// A homomorphism between finite-index partitionable algebras, carried
// contravariantly: block_map sends each finest-kernel block of the target to
// a finest-kernel block of the source, and the element action precomposes
// with it.  Every such block map is a homomorphism, and every homomorphism
// arises this way on finite index sets.
class AlgHom {
 public:
  AlgHom(FinAlgebra source, FinAlgebra target, std::vector<std::size_t> block_map);

  const FinAlgebra& source() const { return source_; }
  const FinAlgebra& target() const { return target_; }
  const std::vector<std::size_t>& block_map() const { return block_map_; }

  friend bool operator==(const AlgHom&, const AlgHom&) = default;

 private:
  FinAlgebra source_;
  FinAlgebra target_;
  std::vector<std::size_t> block_map_;  // target blocks -> source blocks
};

// The induced element action: source members to target members.
Labeling apply_hom(const AlgHom& h, const Labeling& source_member);

AlgHom identity_hom(const FinAlgebra& algebra);

// f followed by g.
AlgHom compose(const AlgHom& f, const AlgHom& g);

bool is_isomorphism(const AlgHom& h);

// The algebra of uniformly continuous labelings of a space: index set = the
// points, finest kernel = the finest uniform partition.
FinAlgebra b_functor(const FinSpace& x);

// Contravariant action on maps: g -> g o f, as a hom from b_functor(target)
// to b_functor(source).
AlgHom b_on_map(const UniformMap& f);

// Contravariant action on homs: theta -> theta o phi, as a uniformly
// continuous map spectrum(target) -> spectrum(source).
UniformMap z_on_hom(const AlgHom& phi);

// The evaluation map x -> (f -> f(x)): sends each point to its finest-block
// point of the spectrum of b_functor(x).  Always uniformly continuous with
// dense image; injective iff the space is separated; bijective iff separated
// (finite presentations are complete).
UniformMap unit_c(const FinSpace& x);

// The representation map l -> (phi -> phi(l)) as a hom onto the algebra of
// uniformly continuous labelings of the spectrum.  An isomorphism for every
// finite-index partitionable algebra.
AlgHom counit_rho(const FinAlgebra& algebra);

// Z(B(f)) o C_X = C_Y o f, checked pointwise.
bool check_naturality_space(const UniformMap& f);

// B(Z(phi)) o rho_L = rho_M o phi, checked on all members over a 3-label
// alphabet.
bool check_naturality_alg(const AlgHom& phi);

// All four unit/counit composites are identities: Z(rho_L) with C_{Z(L)} on
// the spectrum side and B(C_X) with rho_{B(X)} on the algebra side.
bool check_unit_counit(const FinAlgebra& algebra, const FinSpace& x);

}  // namespace clonedual

#endif
