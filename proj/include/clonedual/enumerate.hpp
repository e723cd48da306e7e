#ifndef CLONEDUAL_ENUMERATE_HPP
#define CLONEDUAL_ENUMERATE_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "clonedual/clone_algebra.hpp"
#include "clonedual/duality.hpp"
#include "clonedual/finspace.hpp"
#include "clonedual/partition.hpp"
#include "clonedual/tower.hpp"

namespace clonedual {

// All partitions of {0, ..., n-1} via restricted growth strings, in
// lexicographic order of the canonical block-id sequences.
std::vector<Partition> all_partitions(std::size_t n);

// All surjections {0, ..., from-1} -> {0, ..., onto-1} as value vectors.
std::vector<std::vector<std::size_t>> all_surjections(std::size_t from,
                                                      std::size_t onto);

// Every tower with depth <= max_depth and level sizes <= max_level, all bond
// choices included.
std::vector<Tower> all_towers(std::size_t max_depth, std::size_t max_level);

// The nonempty subsets of {0, ..., n-1} in canonical binary order.
std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n);

// All subsets including the empty one, same order starting from {}.
std::vector<std::vector<std::size_t>> all_subsets(std::size_t n);

Partition random_partition(std::mt19937_64& rng, std::size_t n);

// Point count 1..max_points, 1..max_generators random generator partitions.
FinSpace random_space(std::mt19937_64& rng, std::size_t max_points,
                      std::size_t max_generators);

// Uniformly continuous map sampled blockwise: each finest-block of the
// source picks a finest-block of the target, each point picks a point inside
// the chosen block.
UniformMap random_uniform_map(std::mt19937_64& rng, const FinSpace& x,
                              const FinSpace& y);

AlgHom random_hom(std::mt19937_64& rng, const FinAlgebra& source,
                  const FinAlgebra& target);

Labeling random_labeling(std::mt19937_64& rng, std::size_t index_size,
                         std::uint64_t alphabet);

}  // namespace clonedual

#endif
