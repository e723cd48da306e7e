#include "clonedual/duality.hpp"

#include <string>
#include <utility>

#include "clonedual/errors.hpp"

namespace clonedual {

AlgHom::AlgHom(FinAlgebra source, FinAlgebra target,
               std::vector<std::size_t> block_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      block_map_(std::move(block_map)) {
  if (block_map_.size() != target_.block_count()) {
    throw SizeMismatchError("AlgHom: block map has length " +
                            std::to_string(block_map_.size()) +
                            ", expected one entry per target block (" +
                            std::to_string(target_.block_count()) + ")");
  }
  for (std::size_t b : block_map_) {
    if (b >= source_.block_count()) {
      throw ValidationError("AlgHom: block map value " + std::to_string(b) +
                            " out of range for " +
                            std::to_string(source_.block_count()) +
                            " source blocks");
    }
  }
}

Labeling apply_hom(const AlgHom& h, const Labeling& source_member) {
  const std::vector<std::uint64_t> values =
      block_values_of(h.source(), source_member);
  std::vector<std::uint64_t> target_values(h.target().block_count());
  for (std::size_t b = 0; b < target_values.size(); ++b) {
    target_values[b] = values[h.block_map()[b]];
  }
  return member_from_block_values(h.target(), target_values);
}

AlgHom identity_hom(const FinAlgebra& algebra) {
  std::vector<std::size_t> ids(algebra.block_count());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return AlgHom(algebra, algebra, std::move(ids));
}

AlgHom compose(const AlgHom& f, const AlgHom& g) {
  if (!(f.target() == g.source())) {
    throw ValidationError("compose: inner target and outer source differ");
  }
  // Contravariant data composes the other way around.
  std::vector<std::size_t> block_map(g.target().block_count());
  for (std::size_t b = 0; b < block_map.size(); ++b) {
    block_map[b] = f.block_map()[g.block_map()[b]];
  }
  return AlgHom(f.source(), g.target(), std::move(block_map));
}

bool is_isomorphism(const AlgHom& h) {
  if (h.source().block_count() != h.target().block_count()) return false;
  std::vector<bool> hit(h.source().block_count(), false);
  for (std::size_t b : h.block_map()) {
    if (hit[b]) return false;
    hit[b] = true;
  }
  return true;
}

FinAlgebra b_functor(const FinSpace& x) {
  return FinAlgebra(x.point_count(), x.finest());
}

AlgHom b_on_map(const UniformMap& f) {
  const FinAlgebra source = b_functor(f.target());
  const FinAlgebra target = b_functor(f.source());
  const Partition& fine_x = f.source().finest();
  const Partition& fine_y = f.target().finest();
  const auto reps = fine_x.block_representatives();
  std::vector<std::size_t> block_map(reps.size());
  for (std::size_t b = 0; b < reps.size(); ++b) {
    block_map[b] = fine_y.block_of(f(reps[b]));
  }
  return AlgHom(source, target, std::move(block_map));
}

UniformMap z_on_hom(const AlgHom& phi) {
  return UniformMap(spectrum(phi.target()), spectrum(phi.source()),
                    phi.block_map());
}

UniformMap unit_c(const FinSpace& x) {
  return UniformMap(x, spectrum(b_functor(x)), x.finest().block_ids());
}

AlgHom counit_rho(const FinAlgebra& algebra) {
  const FinAlgebra target = b_functor(spectrum(algebra));
  // The spectrum point of block b is exactly evaluation on block b, so the
  // canonical block correspondence is the identity on indices.
  std::vector<std::size_t> block_map(algebra.block_count());
  for (std::size_t i = 0; i < block_map.size(); ++i) block_map[i] = i;
  return AlgHom(algebra, target, std::move(block_map));
}

bool check_naturality_space(const UniformMap& f) {
  const UniformMap left = compose(unit_c(f.source()), z_on_hom(b_on_map(f)));
  const UniformMap right = compose(f, unit_c(f.target()));
  return left.values() == right.values();
}

bool check_naturality_alg(const AlgHom& phi) {
  const AlgHom left = compose(counit_rho(phi.source()), b_on_map(z_on_hom(phi)));
  const AlgHom right = compose(phi, counit_rho(phi.target()));
  // Compare the element actions on every member over a 3-label alphabet.
  for (const Labeling& ell : members_over_alphabet(phi.source(), 3)) {
    if (!(apply_hom(left, ell) == apply_hom(right, ell))) return false;
  }
  return true;
}

bool check_unit_counit(const FinAlgebra& algebra, const FinSpace& x) {
  // Spectrum side: Z(rho_L) and C_{Z(L)} are mutually inverse.
  {
    const AlgHom rho = counit_rho(algebra);
    const UniformMap z_rho = z_on_hom(rho);
    const UniformMap c = unit_c(z_rho.target());
    if (!(compose(c, z_rho) == identity_map(z_rho.target()))) return false;
    if (!(compose(z_rho, c) == identity_map(z_rho.source()))) return false;
  }
  // Algebra side: B(C_X) and rho_{B(X)} are mutually inverse.
  {
    const UniformMap c = unit_c(x);
    const AlgHom b_c = b_on_map(c);
    const AlgHom rho = counit_rho(b_functor(x));
    if (!(compose(rho, b_c) == identity_hom(b_functor(x)))) return false;
    if (!(compose(b_c, rho) == identity_hom(b_c.source()))) return false;
  }
  return true;
}

}  // namespace clonedual
