// Test-only reference implementations, kept independent of the library's
// algorithms: meets via pairwise block intersections, joins via boolean
// transitive closure, uniform continuity via the pair-of-points sweep, and
// operation application via a separate fresh allocator.
#ifndef CLONEDUAL_TESTS_ORACLES_HPP
#define CLONEDUAL_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "clonedual/clone_algebra.hpp"
#include "clonedual/finspace.hpp"
#include "clonedual/partition.hpp"
#include "clonedual/tower.hpp"

namespace clonedual::oracle {

inline std::vector<std::set<std::size_t>> block_sets(const Partition& p) {
  std::vector<std::set<std::size_t>> out(p.block_count());
  for (std::size_t i = 0; i < p.ground_size(); ++i) {
    out[p.block_of(i)].insert(i);
  }
  return out;
}

// Meet by intersecting every block of p with every block of q.
inline Partition meet_oracle(const Partition& p, const Partition& q) {
  const std::size_t n = p.ground_size();
  std::vector<std::size_t> ids(n, 0);
  std::size_t next = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    // Identify the (p-block, q-block) intersection cell containing i.
    std::set<std::size_t> cell;
    for (std::size_t j = 0; j < n; ++j) {
      if (p.block_of(j) == p.block_of(i) && q.block_of(j) == q.block_of(i)) {
        cell.insert(j);
      }
    }
    const std::size_t least = *cell.begin();
    auto key = std::make_pair(p.block_of(least), q.block_of(least));
    if (!seen.contains(key)) seen.emplace(key, next++);
    ids[i] = seen.at(key);
  }
  return Partition::from_block_ids(ids);
}

// Join as the transitive closure of the union of the two relations.
inline Partition join_oracle(const Partition& p, const Partition& q) {
  const std::size_t n = p.ground_size();
  std::vector<std::vector<bool>> related(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      related[i][j] = p.block_of(i) == p.block_of(j) ||
                      q.block_of(i) == q.block_of(j);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (related[i][k] && related[k][j]) related[i][j] = true;
      }
    }
  }
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t least = i;
    for (std::size_t j = 0; j < n; ++j) {
      if (related[i][j] && j < least) least = j;
    }
    ids[i] = least;
  }
  return Partition::from_block_ids(ids);
}

// Refinement by explicit block containment.
inline bool refines_oracle(const Partition& p, const Partition& q) {
  for (const auto& pb : block_sets(p)) {
    bool contained = false;
    for (const auto& qb : block_sets(q)) {
      if (std::includes(qb.begin(), qb.end(), pb.begin(), pb.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) return false;
  }
  return true;
}

// Uniform continuity by the pair-of-points sweep: points in one finest-block
// of the source must land in one block of every target generator.
inline bool uniform_oracle(const std::vector<std::size_t>& values,
                           const FinSpace& x, const FinSpace& y) {
  if (values.size() != x.point_count()) return false;
  for (std::size_t v : values) {
    if (v >= y.point_count()) return false;
  }
  for (std::size_t a = 0; a < x.point_count(); ++a) {
    for (std::size_t b = 0; b < x.point_count(); ++b) {
      if (x.finest().block_of(a) != x.finest().block_of(b)) continue;
      for (const Partition& gen : y.generators()) {
        if (gen.block_of(values[a]) != gen.block_of(values[b])) return false;
      }
    }
  }
  return true;
}

// Pointwise application with its own fresh-label bookkeeping.
inline Labeling apply_op_oracle(const OpTable& op,
                                const std::vector<Labeling>& args) {
  const std::size_t n = args.at(0).index_size();
  std::set<std::uint64_t> used;
  for (const Labeling& a : args) {
    used.insert(a.labels().begin(), a.labels().end());
  }
  for (const auto& [tuple, value] : op.entries) {
    used.insert(tuple.begin(), tuple.end());
    used.insert(value);
  }
  // Collect unseen tuples in lexicographic order, then hand out the smallest
  // unused naturals in that order.
  std::set<std::vector<std::uint64_t>> unseen;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> tuple;
    for (const Labeling& a : args) tuple.push_back(a[i]);
    if (!op.entries.contains(tuple)) unseen.insert(tuple);
  }
  std::map<std::vector<std::uint64_t>, std::uint64_t> fresh;
  std::uint64_t candidate = 0;
  for (const auto& tuple : unseen) {
    if (op.constant_default.has_value()) {
      fresh[tuple] = *op.constant_default;
    } else {
      while (used.contains(candidate)) ++candidate;
      used.insert(candidate);
      fresh[tuple] = candidate;
    }
  }
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> tuple;
    for (const Labeling& a : args) tuple.push_back(a[i]);
    out[i] = op.entries.contains(tuple) ? op.entries.at(tuple) : fresh.at(tuple);
  }
  return Labeling(out);
}

// Downward closure of top-level points by per-point ancestor marking,
// followed by childless-node deletion until a fixpoint.
inline SubTree downward_closure_oracle(const Tower& tower,
                                       const std::vector<std::size_t>& points) {
  const std::size_t d = tower.depth();
  std::vector<std::set<std::size_t>> marked(d + 1);
  for (std::size_t p : points) {
    std::size_t node = p;
    marked[d].insert(node);
    for (std::size_t n = d; n-- > 0;) {
      node = tower.bond(n, node);
      marked[n].insert(node);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t n = 0; n < d; ++n) {
      std::set<std::size_t> with_child;
      for (std::size_t u : marked[n + 1]) with_child.insert(tower.bond(n, u));
      std::set<std::size_t> kept;
      for (std::size_t v : marked[n]) {
        if (with_child.contains(v)) kept.insert(v);
      }
      if (kept != marked[n]) {
        marked[n] = kept;
        changed = true;
      }
    }
  }
  for (const auto& level : marked) {
    if (level.empty()) return SubTree::empty(tower);
  }
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& level : marked) sets.emplace_back(level.begin(), level.end());
  return SubTree(tower, std::move(sets));
}

}  // namespace clonedual::oracle

#endif
