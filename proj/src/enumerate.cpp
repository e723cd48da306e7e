#include "clonedual/enumerate.hpp"

#include <algorithm>

#include "clonedual/errors.hpp"

namespace clonedual {

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition::discrete(0));
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0);
  while (true) {
    out.push_back(Partition::from_block_ids(a));
    std::size_t pos = n;
    while (pos > 1) {
      --pos;
      std::size_t max_prefix = 0;
      for (std::size_t i = 0; i < pos; ++i) max_prefix = std::max(max_prefix, a[i]);
      if (a[pos] <= max_prefix) {
        ++a[pos];
        for (std::size_t i = pos + 1; i < n; ++i) a[i] = 0;
        break;
      }
      if (pos == 1) return out;
    }
    if (n == 1) return out;
  }
}

std::vector<std::vector<std::size_t>> all_surjections(std::size_t from,
                                                      std::size_t onto) {
  std::vector<std::vector<std::size_t>> out;
  if (onto == 0 || from < onto) return out;
  std::vector<std::size_t> values(from, 0);
  while (true) {
    std::vector<bool> hit(onto, false);
    for (std::size_t v : values) hit[v] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      out.push_back(values);
    }
    std::size_t pos = from;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++values[pos] < onto) {
        done = false;
        break;
      }
      values[pos] = 0;
    }
    if (done) return out;
  }
}

std::vector<Tower> all_towers(std::size_t max_depth, std::size_t max_level) {
  std::vector<Tower> out;
  // Size tuples are nondecreasing upward, forced by bond surjectivity.
  std::vector<std::size_t> sizes;
  auto extend_bonds = [&](auto&& self, std::vector<std::vector<std::size_t>>& bonds)
      -> void {
    if (bonds.size() + 1 == sizes.size()) {
      out.emplace_back(sizes, bonds);
      return;
    }
    const std::size_t n = bonds.size();
    for (const auto& bond : all_surjections(sizes[n + 1], sizes[n])) {
      bonds.push_back(bond);
      self(self, bonds);
      bonds.pop_back();
    }
  };
  auto extend_sizes = [&](auto&& self) -> void {
    std::vector<std::vector<std::size_t>> bonds;
    extend_bonds(extend_bonds, bonds);
    if (sizes.size() == max_depth + 1) return;
    for (std::size_t next = sizes.back(); next <= max_level; ++next) {
      sizes.push_back(next);
      self(self);
      sizes.pop_back();
    }
  };
  for (std::size_t s0 = 1; s0 <= max_level; ++s0) {
    sizes.assign(1, s0);
    extend_sizes(extend_sizes);
  }
  return out;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  auto out = all_subsets(n);
  out.erase(out.begin());
  return out;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n) {
  if (n >= 20) {
    throw ValidationError("all_subsets: ground set too large to materialize");
  }
  std::vector<std::vector<std::size_t>> out(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < out.size(); ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) out[mask].push_back(i);
    }
  }
  return out;
}

Partition random_partition(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::size_t max_seen = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i == 0 ? 0 : max_seen + 1);
    ids[i] = pick(rng);
    max_seen = std::max(max_seen, ids[i]);
  }
  return Partition::from_block_ids(ids);
}

FinSpace random_space(std::mt19937_64& rng, std::size_t max_points,
                      std::size_t max_generators) {
  std::uniform_int_distribution<std::size_t> points(1, max_points);
  std::uniform_int_distribution<std::size_t> gens(1, max_generators);
  const std::size_t n = points(rng);
  std::vector<Partition> generators;
  const std::size_t g = gens(rng);
  generators.reserve(g);
  for (std::size_t i = 0; i < g; ++i) {
    generators.push_back(random_partition(rng, n));
  }
  return FinSpace(n, std::move(generators));
}

UniformMap random_uniform_map(std::mt19937_64& rng, const FinSpace& x,
                              const FinSpace& y) {
  const auto y_blocks = y.finest().blocks();
  if (y_blocks.empty()) {
    throw ValidationError("random_uniform_map: empty target");
  }
  std::uniform_int_distribution<std::size_t> pick_block(0, y_blocks.size() - 1);
  std::vector<std::size_t> block_choice(x.finest().block_count());
  for (std::size_t& b : block_choice) b = pick_block(rng);
  std::vector<std::size_t> values(x.point_count());
  for (std::size_t p = 0; p < values.size(); ++p) {
    const auto& block = y_blocks[block_choice[x.finest().block_of(p)]];
    std::uniform_int_distribution<std::size_t> pick_point(0, block.size() - 1);
    values[p] = block[pick_point(rng)];
  }
  return UniformMap(x, y, std::move(values));
}

AlgHom random_hom(std::mt19937_64& rng, const FinAlgebra& source,
                  const FinAlgebra& target) {
  if (source.block_count() == 0) {
    throw ValidationError("random_hom: source algebra has no blocks");
  }
  std::uniform_int_distribution<std::size_t> pick(0, source.block_count() - 1);
  std::vector<std::size_t> block_map(target.block_count());
  for (std::size_t& b : block_map) b = pick(rng);
  return AlgHom(source, target, std::move(block_map));
}

Labeling random_labeling(std::mt19937_64& rng, std::size_t index_size,
                         std::uint64_t alphabet) {
  std::uniform_int_distribution<std::uint64_t> pick(0, alphabet - 1);
  std::vector<std::uint64_t> labels(index_size);
  for (auto& l : labels) l = pick(rng);
  return Labeling(std::move(labels));
}

}  // namespace clonedual
