#include "clonedual/tower.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "clonedual/errors.hpp"

namespace clonedual {

namespace {

std::vector<std::size_t> sorted_image(const std::vector<std::size_t>& bond,
                                      const std::vector<std::size_t>& nodes) {
  std::set<std::size_t> out;
  for (std::size_t u : nodes) out.insert(bond[u]);
  return {out.begin(), out.end()};
}

void require_level_set(const std::vector<std::size_t>& nodes, std::size_t size,
                       std::size_t level, const char* what) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= size) {
      throw ValidationError(std::string(what) + ": node " +
                            std::to_string(nodes[i]) +
                            " out of range at level " + std::to_string(level));
    }
    if (i > 0 && nodes[i] <= nodes[i - 1]) {
      throw ValidationError(std::string(what) +
                            ": node set must be strictly increasing at level " +
                            std::to_string(level));
    }
  }
}

}  // namespace

Tower::Tower(std::vector<std::size_t> level_sizes,
             std::vector<std::vector<std::size_t>> bonds)
    : level_sizes_(std::move(level_sizes)), bonds_(std::move(bonds)) {
  if (level_sizes_.empty()) {
    throw ValidationError("Tower: at least one level is required");
  }
  if (level_sizes_[0] == 0) {
    throw ValidationError("Tower: level 0 must be nonempty");
  }
  if (bonds_.size() + 1 != level_sizes_.size()) {
    throw ValidationError("Tower: expected " +
                          std::to_string(level_sizes_.size() - 1) +
                          " bonds, got " + std::to_string(bonds_.size()));
  }
  for (std::size_t n = 0; n < bonds_.size(); ++n) {
    if (bonds_[n].size() != level_sizes_[n + 1]) {
      throw ValidationError("Tower: bond " + std::to_string(n) +
                            " has length " + std::to_string(bonds_[n].size()) +
                            ", expected " + std::to_string(level_sizes_[n + 1]));
    }
    std::vector<bool> hit(level_sizes_[n], false);
    for (std::size_t v : bonds_[n]) {
      if (v >= level_sizes_[n]) {
        throw ValidationError("Tower: bond " + std::to_string(n) +
                              " maps outside level " + std::to_string(n));
      }
      hit[v] = true;
    }
    for (std::size_t v = 0; v < hit.size(); ++v) {
      if (!hit[v]) {
        throw ValidationError("Tower: bond " + std::to_string(n) +
                              " is not surjective (node " + std::to_string(v) +
                              " of level " + std::to_string(n) + " unreached)");
      }
    }
  }
}

SubTree::SubTree(Tower tower, std::vector<std::vector<std::size_t>> node_sets)
    : tower_(std::move(tower)), node_sets_(std::move(node_sets)) {
  if (node_sets_.size() != tower_.depth() + 1) {
    throw ValidationError("SubTree: expected one node set per level");
  }
  for (std::size_t n = 0; n < node_sets_.size(); ++n) {
    require_level_set(node_sets_[n], tower_.level_size(n), n, "SubTree");
  }
  for (std::size_t n = 0; n + 1 < node_sets_.size(); ++n) {
    for (std::size_t u : node_sets_[n + 1]) {
      if (!std::binary_search(node_sets_[n].begin(), node_sets_[n].end(),
                              tower_.bond(n, u))) {
        throw ValidationError(
            "SubTree: node " + std::to_string(u) + " at level " +
            std::to_string(n + 1) + " maps to " +
            std::to_string(tower_.bond(n, u)) +
            ", which is missing from level " + std::to_string(n));
      }
    }
  }
}

SubTree SubTree::empty(Tower tower) {
  std::vector<std::vector<std::size_t>> sets(tower.depth() + 1);
  return SubTree(std::move(tower), std::move(sets));
}

SubTree SubTree::full(Tower tower) {
  std::vector<std::vector<std::size_t>> sets(tower.depth() + 1);
  for (std::size_t n = 0; n < sets.size(); ++n) {
    sets[n].resize(tower.level_size(n));
    for (std::size_t i = 0; i < sets[n].size(); ++i) sets[n][i] = i;
  }
  return SubTree(std::move(tower), std::move(sets));
}

bool SubTree::is_empty() const {
  for (const auto& level : node_sets_) {
    if (!level.empty()) return false;
  }
  return true;
}

bool is_pruned(const SubTree& t) {
  if (t.is_empty()) return true;
  const std::size_t d = t.tower().depth();
  for (std::size_t n = 0; n <= d; ++n) {
    if (t.level(n).empty()) return false;
  }
  for (std::size_t n = 0; n < d; ++n) {
    if (sorted_image(t.tower().bonds()[n], t.level(n + 1)) != t.level(n)) {
      return false;
    }
  }
  return true;
}

SubTree prune(const SubTree& t) {
  const std::size_t d = t.tower().depth();
  std::vector<std::vector<std::size_t>> sets = t.node_sets();
  for (std::size_t n = d; n-- > 0;) {
    const std::vector<std::size_t> image =
        sorted_image(t.tower().bonds()[n], sets[n + 1]);
    std::vector<std::size_t> kept;
    std::set_intersection(sets[n].begin(), sets[n].end(), image.begin(),
                          image.end(), std::back_inserter(kept));
    sets[n] = std::move(kept);
  }
  if (sets[d].empty() || sets[0].empty()) {
    return SubTree::empty(t.tower());
  }
  return SubTree(t.tower(), std::move(sets));
}

std::vector<LevelCongruence> gamma(const SubTree& t) {
  if (t.is_empty()) {
    throw ValidationError("gamma: the empty subtree has no congruence thread");
  }
  if (!is_pruned(t)) {
    throw ValidationError("gamma: input subtree must be pruned");
  }
  std::vector<LevelCongruence> out;
  out.reserve(t.tower().depth() + 1);
  for (std::size_t n = 0; n <= t.tower().depth(); ++n) {
    out.emplace_back(t.tower(), n, t.level(n));
  }
  return out;
}

SubTree delta(const std::vector<LevelCongruence>& family) {
  if (family.empty()) {
    throw ValidationError("delta: family must be nonempty");
  }
  const Tower& tower = family[0].tower();
  if (family.size() != tower.depth() + 1) {
    throw ValidationError("delta: expected one congruence per level");
  }
  for (std::size_t n = 0; n < family.size(); ++n) {
    if (!(family[n].tower() == tower)) {
      throw ValidationError("delta: family members live on different towers");
    }
    if (family[n].level() != n) {
      throw ValidationError("delta: family must list levels 0.." +
                            std::to_string(tower.depth()) + " in order");
    }
    if (family[n].support().empty()) {
      throw ValidationError("delta: empty supports are outside the domain");
    }
  }
  for (std::size_t n = 0; n + 1 < family.size(); ++n) {
    if (sorted_image(tower.bonds()[n], family[n + 1].support()) !=
        family[n].support()) {
      throw IncompatibleFamilyError(
          "delta: support at level " + std::to_string(n) +
              " is not the bond image of the support at level " +
              std::to_string(n + 1),
          n);
    }
  }
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(family.size());
  for (const LevelCongruence& c : family) sets.push_back(c.support());
  return SubTree(tower, std::move(sets));
}

LevelCongruence::LevelCongruence(Tower tower, std::size_t level,
                                 std::vector<std::size_t> support)
    : tower_(std::move(tower)), level_(level), support_(std::move(support)) {
  if (level_ > tower_.depth()) {
    throw ValidationError("LevelCongruence: level " + std::to_string(level_) +
                          " exceeds depth " + std::to_string(tower_.depth()));
  }
  require_level_set(support_, tower_.level_size(level_), level_,
                    "LevelCongruence");
}

LevelCongruence density_witness(const SubTree& t, std::size_t level) {
  if (t.is_empty() || !is_pruned(t)) {
    throw ValidationError("density_witness: subtree must be pruned and nonempty");
  }
  const Tower& tower = t.tower();
  if (level > tower.depth()) {
    throw ValidationError("density_witness: level " + std::to_string(level) +
                          " exceeds depth " + std::to_string(tower.depth()));
  }
  // Full preimage of T_level at the top of the tower.
  std::vector<std::size_t> current = t.level(level);
  for (std::size_t n = level; n < tower.depth(); ++n) {
    std::vector<std::size_t> lifted;
    for (std::size_t u = 0; u < tower.level_size(n + 1); ++u) {
      if (std::binary_search(current.begin(), current.end(),
                             tower.bond(n, u))) {
        lifted.push_back(u);
      }
    }
    current = std::move(lifted);
  }
  return LevelCongruence(tower, tower.depth(), std::move(current));
}

std::vector<LevelCongruence> principal_family(
    const Tower& tower, const std::vector<std::size_t>& top_support) {
  require_level_set(top_support, tower.level_size(tower.depth()),
                    tower.depth(), "principal_family");
  std::vector<std::vector<std::size_t>> supports(tower.depth() + 1);
  supports[tower.depth()] = top_support;
  for (std::size_t n = tower.depth(); n-- > 0;) {
    supports[n] = sorted_image(tower.bonds()[n], supports[n + 1]);
  }
  std::vector<LevelCongruence> out;
  out.reserve(supports.size());
  for (std::size_t n = 0; n < supports.size(); ++n) {
    out.emplace_back(tower, n, std::move(supports[n]));
  }
  return out;
}

SubTree tower_closure_D(const Tower& tower,
                        const std::vector<std::size_t>& points) {
  if (points.empty()) {
    return SubTree::empty(tower);
  }
  return prune(delta(principal_family(tower, points)));
}

bool hyper_complete_check(const Tower& t) {
  const std::size_t top = t.level_size(t.depth());
  // Image compatibility determines every level from the top one, so the
  // compatible families correspond to the nonempty top-level subsets.
  auto family_realized = [&](const std::vector<std::size_t>& top_support) {
    const std::vector<LevelCongruence> family = principal_family(t, top_support);
    const SubTree realized = delta(family);
    if (!is_pruned(realized)) return false;
    return gamma(realized) == family;
  };

  if (top <= 12) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << top); ++mask) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < top; ++i) {
        if (mask & (std::size_t{1} << i)) support.push_back(i);
      }
      if (!family_realized(support)) return false;
    }
    return true;
  }

  // Too many subsets to sweep; sample deterministically.
  std::mt19937_64 rng(0x746f776572u);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 4096; ++trial) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < top; ++i) {
      if (coin(rng)) support.push_back(i);
    }
    if (support.empty()) support.push_back(trial % top);
    if (!family_realized(support)) return false;
  }
  return true;
}

TowerReport classify(const Tower& t) {
  const std::size_t d = t.depth();
  std::size_t stable_from = d;
  for (std::size_t n = d; n-- > 0;) {
    const bool bijective = t.level_size(n + 1) == t.level_size(n);
    if (!bijective) break;
    stable_from = n;
  }
  return TowerReport{
      .discrete_at_truncation = stable_from < d || d == 0,
      .stable_from = stable_from,
      .metrizable_presentation = true,
  };
}

}  // namespace clonedual
