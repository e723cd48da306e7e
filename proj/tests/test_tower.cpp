#include <doctest.h>

#include <random>

#include "clonedual/enumerate.hpp"
#include "clonedual/errors.hpp"
#include "clonedual/tower.hpp"
#include "oracles.hpp"

using namespace clonedual;

namespace {

// Levels {r}, {a,b}, {a0,b0}: a0 -> a -> r and b0 -> b -> r.
Tower example_tower() { return Tower({1, 2, 2}, {{0, 0}, {0, 1}}); }

}  // namespace

TEST_CASE("tower validation") {
  CHECK(example_tower().depth() == 2);
  CHECK_THROWS_AS(Tower({}, {}), ValidationError);
  CHECK_THROWS_AS(Tower({0}, {}), ValidationError);
  CHECK_THROWS_AS(Tower({1, 2}, {}), ValidationError);
  // Non-surjective bond: both level-1 nodes map to node 0.
  CHECK_THROWS_AS(Tower({2, 2}, {{0, 0}}), ValidationError);
  try {
    Tower({2, 2}, {{0, 0}});
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("bond 0") != std::string::npos);
    CHECK(std::string(e.what()).find("not surjective") != std::string::npos);
  }
  CHECK_THROWS_AS(Tower({1, 2}, {{0, 1}}), ValidationError);  // out of range
}

TEST_CASE("prune") {
  const Tower t = example_tower();
  CHECK(prune(SubTree::full(t)) == SubTree::full(t));
  CHECK(is_pruned(SubTree::full(t)));

  // T2 = {a0}, T1 = {a,b}, T0 = {r}: b has no child, so T1 shrinks to {a}.
  const SubTree unpruned(t, {{0}, {0, 1}, {0}});
  CHECK_FALSE(is_pruned(unpruned));
  const SubTree pruned = prune(unpruned);
  CHECK(pruned == SubTree(t, {{0}, {0}, {0}}));
  CHECK(is_pruned(pruned));
  CHECK(prune(pruned) == pruned);  // idempotent

  // Empty top level prunes to the designated empty subtree.
  CHECK(prune(SubTree(t, {{0}, {0, 1}, {}})) == SubTree::empty(t));
  CHECK(SubTree::empty(t).is_empty());
  CHECK(is_pruned(SubTree::empty(t)));

  // Node sets must be image-compatible downward.
  CHECK_THROWS_AS(SubTree(t, {{0}, {1}, {0, 1}}), ValidationError);
}

TEST_CASE("gamma reads off level supports") {
  const Tower t = example_tower();
  const auto full = gamma(SubTree::full(t));
  REQUIRE(full.size() == 3);
  CHECK(full[0].support() == std::vector<std::size_t>{0});
  CHECK(full[1].support() == std::vector<std::size_t>{0, 1});
  CHECK(full[2].support() == std::vector<std::size_t>{0, 1});

  const SubTree branch(t, {{0}, {0}, {0}});
  const auto thread = gamma(branch);
  CHECK(thread[1].support() == std::vector<std::size_t>{0});
  CHECK(thread[2].support() == std::vector<std::size_t>{0});

  CHECK_THROWS_AS(gamma(SubTree(t, {{0}, {0, 1}, {0}})), ValidationError);
  CHECK_THROWS_AS(gamma(SubTree::empty(t)), ValidationError);
}

TEST_CASE("delta assembles threads and rejects incompatibility") {
  const Tower t = example_tower();
  const SubTree branch(t, {{0}, {0}, {0}});
  CHECK(delta(gamma(branch)) == branch);
  CHECK(delta(gamma(SubTree::full(t))) == SubTree::full(t));

  // Supports {r}, {a}, {b0}: p(b0) = b is missing from level 1.
  const std::vector<LevelCongruence> bad = {
      LevelCongruence(t, 0, {0}),
      LevelCongruence(t, 1, {0}),
      LevelCongruence(t, 2, {1}),
  };
  CHECK_THROWS_AS(delta(bad), IncompatibleFamilyError);
  try {
    delta(bad);
  } catch (const IncompatibleFamilyError& e) {
    CHECK(e.level == 1);
  }
  CHECK_THROWS_AS(delta({LevelCongruence(t, 0, {})}), ValidationError);
}

TEST_CASE("density witness") {
  const Tower t = example_tower();
  const SubTree branch(t, {{0}, {0}, {0}});

  // At the top level the witness is the top support itself.
  CHECK(density_witness(branch, 2).support() == std::vector<std::size_t>{0});
  CHECK(density_witness(SubTree::full(t), 2).support() ==
        std::vector<std::size_t>{0, 1});

  // At level 0 the witness is every top node over T0.
  CHECK(density_witness(branch, 0).support() == std::vector<std::size_t>{0, 1});

  // Single branch at intermediate level: only the branch's top nodes.
  CHECK(density_witness(branch, 1).support() == std::vector<std::size_t>{0});

  CHECK_THROWS_AS(density_witness(branch, 3), ValidationError);
  CHECK_THROWS_AS(density_witness(SubTree::empty(t), 0), ValidationError);

  // The witness agrees with the thread at every level up to the requested one.
  for (const Tower& tower : all_towers(3, 3)) {
    for (const auto& top : nonempty_subsets(tower.level_size(tower.depth()))) {
      const SubTree sub = delta(principal_family(tower, top));
      const auto thread = gamma(sub);
      for (std::size_t n = 0; n <= tower.depth(); ++n) {
        const auto witness_family =
            principal_family(tower, density_witness(sub, n).support());
        for (std::size_t k = 0; k <= n; ++k) {
          REQUIRE(witness_family[k].support() == thread[k].support());
        }
      }
    }
  }
}

TEST_CASE("tower closure") {
  const Tower t = example_tower();
  std::vector<std::size_t> everything = {0, 1};
  CHECK(tower_closure_D(t, everything) == SubTree::full(t));
  CHECK(tower_closure_D(t, {}) == SubTree::empty(t));
  CHECK(tower_closure_D(t, {0}) == SubTree(t, {{0}, {0}, {0}}));

  for (const Tower& tower : all_towers(3, 3)) {
    const auto subsets = all_subsets(tower.level_size(tower.depth()));
    for (const auto& points : subsets) {
      const SubTree closed = tower_closure_D(tower, points);
      CHECK(closed == oracle::downward_closure_oracle(tower, points));
      if (!closed.is_empty()) {
        const auto& top = closed.level(tower.depth());
        CHECK(std::includes(top.begin(), top.end(), points.begin(), points.end()));
        CHECK(tower_closure_D(tower, top) == closed);
      }
      // Monotone: closing a subset never reaches beyond closing a superset.
      for (const auto& more : subsets) {
        if (!std::includes(more.begin(), more.end(), points.begin(),
                           points.end())) {
          continue;
        }
        const SubTree bigger = tower_closure_D(tower, more);
        for (std::size_t n = 0; n <= tower.depth(); ++n) {
          const auto& small_level = closed.node_sets()[n];
          const auto& big_level = bigger.node_sets()[n];
          CHECK(std::includes(big_level.begin(), big_level.end(),
                              small_level.begin(), small_level.end()));
        }
      }
    }
  }
}

TEST_CASE("gamma and delta are mutually inverse on all pool towers") {
  for (const Tower& tower : all_towers(3, 3)) {
    for (const auto& top : nonempty_subsets(tower.level_size(tower.depth()))) {
      const SubTree sub = delta(principal_family(tower, top));
      REQUIRE(is_pruned(sub));
      CHECK(delta(gamma(sub)) == sub);
      const auto family = gamma(sub);
      CHECK(gamma(delta(family)) == family);
    }
  }
}

TEST_CASE("hyper completeness at truncation") {
  for (const Tower& tower : all_towers(3, 3)) {
    CHECK(hyper_complete_check(tower));
  }
  CHECK(hyper_complete_check(Tower({3}, {})));            // single level
  CHECK(hyper_complete_check(Tower({1, 1, 1}, {{0}, {0}})));  // chain
}

TEST_CASE("classification") {
  const TowerReport bijective = classify(Tower({2, 2, 2}, {{0, 1}, {1, 0}}));
  CHECK(bijective.discrete_at_truncation);
  CHECK(bijective.stable_from == 0);
  CHECK(bijective.metrizable_presentation);

  const TowerReport growing = classify(Tower({1, 2, 3}, {{0, 0}, {0, 1, 1}}));
  CHECK_FALSE(growing.discrete_at_truncation);
  CHECK(growing.stable_from == 2);

  const TowerReport stabilizing = classify(Tower({1, 2, 2}, {{0, 0}, {0, 1}}));
  CHECK(stabilizing.discrete_at_truncation);
  CHECK(stabilizing.stable_from == 1);

  CHECK(classify(Tower({3}, {})).discrete_at_truncation);
}

TEST_CASE("prune is monotone") {
  std::mt19937_64 rng(89);
  const auto towers = all_towers(3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, towers.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Tower& tower = towers[pick(rng)];
    // Random downward-compatible node sets: start full, delete some top nodes.
    std::vector<std::vector<std::size_t>> sets(tower.depth() + 1);
    for (std::size_t n = 0; n <= tower.depth(); ++n) {
      for (std::size_t i = 0; i < tower.level_size(n); ++i) sets[n].push_back(i);
    }
    std::vector<std::size_t> smaller_top, larger_top;
    for (std::size_t i = 0; i < tower.level_size(tower.depth()); ++i) {
      const int r = std::uniform_int_distribution<int>(0, 2)(rng);
      if (r >= 1) larger_top.push_back(i);
      if (r == 2) smaller_top.push_back(i);
    }
    auto with_top = [&](const std::vector<std::size_t>& top) {
      auto copy = sets;
      copy[tower.depth()] = top;
      return prune(SubTree(tower, copy));
    };
    const SubTree small_tree = with_top(smaller_top);
    const SubTree large_tree = with_top(larger_top);
    for (std::size_t n = 0; n <= tower.depth(); ++n) {
      const auto& s = small_tree.node_sets()[n];
      const auto& l = large_tree.node_sets()[n];
      CHECK(std::includes(l.begin(), l.end(), s.begin(), s.end()));
    }
  }
}
