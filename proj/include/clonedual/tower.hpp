#ifndef CLONEDUAL_TOWER_HPP
#define CLONEDUAL_TOWER_HPP

#include <cstddef>
#include <vector>

namespace clonedual {

// A truncated tower of finite quotient sets: levels S_0, ..., S_d with
// surjective bonds p_n : S_{n+1} -> S_n.  Levels model a chain of finitely
// generated subalgebras through their spectra; the bonds are the restriction
// maps.  Surjectivity and S_0 nonempty force every level nonempty.
class Tower {
 public:
  Tower(std::vector<std::size_t> level_sizes,
        std::vector<std::vector<std::size_t>> bonds);

  std::size_t depth() const { return level_sizes_.size() - 1; }
  std::size_t level_size(std::size_t n) const { return level_sizes_[n]; }
  const std::vector<std::size_t>& level_sizes() const { return level_sizes_; }
  const std::vector<std::vector<std::size_t>>& bonds() const { return bonds_; }
  // p_n applied to a level-(n+1) node.
  std::size_t bond(std::size_t n, std::size_t node) const {
    return bonds_[n][node];
  }

  friend bool operator==(const Tower&, const Tower&) = default;

 private:
  std::vector<std::size_t> level_sizes_;
  std::vector<std::vector<std::size_t>> bonds_;
};

// A level-set family T_n subseteq S_n with downward image compatibility
// p_n(T_{n+1}) subseteq T_n.  The pruned normal form additionally has
// p_n(T_{n+1}) = T_n with every level nonempty, or is the designated empty
// subtree (all levels empty); prune() establishes it.
class SubTree {
 public:
  SubTree(Tower tower, std::vector<std::vector<std::size_t>> node_sets);

  static SubTree empty(Tower tower);
  static SubTree full(Tower tower);

  const Tower& tower() const { return tower_; }
  const std::vector<std::vector<std::size_t>>& node_sets() const {
    return node_sets_;
  }
  const std::vector<std::size_t>& level(std::size_t n) const {
    return node_sets_[n];
  }
  bool is_empty() const;

  friend bool operator==(const SubTree&, const SubTree&) = default;

 private:
  Tower tower_;
  std::vector<std::vector<std::size_t>> node_sets_;  // sorted, unique per level
};

// A partitionable congruence of the level-n subalgebra: agreement on the
// supported level-n nodes.
class LevelCongruence {
 public:
  LevelCongruence(Tower tower, std::size_t level, std::vector<std::size_t> support);

  const Tower& tower() const { return tower_; }
  std::size_t level() const { return level_; }
  const std::vector<std::size_t>& support() const { return support_; }

  friend bool operator==(const LevelCongruence&, const LevelCongruence&) = default;

 private:
  Tower tower_;
  std::size_t level_;
  std::vector<std::size_t> support_;  // sorted, unique
};

bool is_pruned(const SubTree& t);

// Largest subtree in which every node has a child at the next level: one
// downward sweep intersecting each level with the bond image of the pruned
// level above.  The closed-set normal form.
SubTree prune(const SubTree& t);

// The thread of level congruences of a pruned nonempty subtree: support T_n
// at each level.  Rejects unpruned or empty input.
std::vector<LevelCongruence> gamma(const SubTree& t);

// Inverse of gamma: assembles the subtree with node sets equal to the
// supports.  Requires one congruence per level over one tower, nonempty
// supports, and exact image compatibility p_n(V_{n+1}) = V_n; throws
// IncompatibleFamilyError naming the first bad level otherwise.
SubTree delta(const std::vector<LevelCongruence>& family);

// The principal congruence agreeing with the subtree at level n: its support
// is the full preimage of T_n at the top level, returned as a top-level
// LevelCongruence.  Its level restrictions agree with gamma(t) at every
// level <= n.
LevelCongruence density_witness(const SubTree& t, std::size_t level);

// Level restrictions of the principal congruence with the given top-level
// support: the supports are the successive bond images.
std::vector<LevelCongruence> principal_family(
    const Tower& tower, const std::vector<std::size_t>& top_support);

// Closure of a set of top-level nodes: the subtree of all their images,
// computed through the level-congruence family and pruned.
SubTree tower_closure_D(const Tower& tower,
                        const std::vector<std::size_t>& points);

// Every image-compatible family of nonempty level subsets is the thread of a
// pruned subtree (exhaustively when the top level is small, sampled
// otherwise).  True on every finite tower: finitely branching pruned trees
// carry full threads.
bool hyper_complete_check(const Tower& t);

struct TowerReport {
  // All bonds from stable_from on are bijective within the truncation.
  bool discrete_at_truncation;
  std::size_t stable_from;
  // Chain-indexed presentations are uniformizable by a metric.
  bool metrizable_presentation;

  friend bool operator==(const TowerReport&, const TowerReport&) = default;
};

TowerReport classify(const Tower& t);

}  // namespace clonedual

#endif
