#include <doctest.h>

#include <random>

#include "clonedual/enumerate.hpp"
#include "clonedual/errors.hpp"
#include "clonedual/partition.hpp"
#include "oracles.hpp"

using namespace clonedual;

namespace {

Partition part(const std::vector<std::size_t>& ids) {
  return Partition::from_block_ids(ids);
}

}  // namespace

TEST_CASE("canonical form") {
  const Partition p = part({5, 5, 2});
  CHECK(p.block_ids() == std::vector<std::size_t>{0, 0, 1});
  CHECK(p.block_count() == 2);
  CHECK(to_string(p) == "{{0,1},{2}}");

  // Block ids are contiguous, appear in first-occurrence order, and every
  // block is nonempty.
  const Partition q = part({9, 1, 9, 4});
  CHECK(q.block_ids() == std::vector<std::size_t>{0, 1, 0, 2});
  for (const auto& block : q.blocks()) CHECK(!block.empty());

  // The empty ground set carries the unique empty partition.
  const Partition empty = part({});
  CHECK(empty.ground_size() == 0);
  CHECK(empty.block_count() == 0);
  CHECK(empty == Partition::discrete(0));
  CHECK(empty == Partition::coarsest(0));
}

TEST_CASE("meet examples") {
  const Partition p = part({0, 0, 1});  // {{0,1},{2}}
  const Partition q = part({0, 1, 1});  // {{0},{1,2}}
  // Oracle first: the pairwise-intersection route gives the discrete partition.
  CHECK(oracle::meet_oracle(p, q) == Partition::discrete(3));
  CHECK(meet(p, q) == Partition::discrete(3));
  CHECK(meet(p, p) == p);
  CHECK(meet(p, Partition::coarsest(3)) == p);
  CHECK_THROWS_AS(meet(p, Partition::discrete(2)), SizeMismatchError);
}

TEST_CASE("join examples") {
  const Partition p = part({0, 0, 1});
  const Partition q = part({0, 1, 1});
  CHECK(oracle::join_oracle(p, q) == Partition::coarsest(3));
  CHECK(join(p, q) == Partition::coarsest(3));
  CHECK(join(p, Partition::discrete(3)) == p);
  CHECK(join(p, p) == p);
  CHECK_THROWS_AS(join(p, part({0})), SizeMismatchError);
}

TEST_CASE("refines examples") {
  const Partition p = part({0, 0, 1});
  const Partition q = part({0, 1, 1});
  CHECK(refines(Partition::discrete(3), q));
  CHECK_FALSE(refines(p, q));
  CHECK(oracle::refines_oracle(Partition::discrete(3), q));
  CHECK_FALSE(oracle::refines_oracle(p, q));
  CHECK(refines(p, meet(p, q)) == (p == meet(p, q)));
  CHECK_THROWS_AS(refines(p, part({0, 1})), SizeMismatchError);
}

TEST_CASE("block_count examples") {
  CHECK(block_count(Partition::discrete(4)) == 4);
  CHECK(block_count(Partition::coarsest(3)) == 1);
  CHECK(block_count(part({0, 0, 1})) == 2);
}

TEST_CASE("meet, join and refines agree with the oracles") {
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<std::size_t> size(0, 9);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = size(rng);
    const Partition p = random_partition(rng, n);
    const Partition q = random_partition(rng, n);
    CAPTURE(to_string(p));
    CAPTURE(to_string(q));
    CHECK(meet(p, q) == oracle::meet_oracle(p, q));
    CHECK(join(p, q) == oracle::join_oracle(p, q));
    CHECK(refines(p, q) == oracle::refines_oracle(p, q));
  }
}

TEST_CASE("lattice laws and order equivalences") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = size(rng);
    const Partition p = random_partition(rng, n);
    const Partition q = random_partition(rng, n);
    const Partition r = random_partition(rng, n);
    CHECK(meet(p, q) == meet(q, p));
    CHECK(join(p, q) == join(q, p));
    CHECK(meet(meet(p, q), r) == meet(p, meet(q, r)));
    CHECK(join(join(p, q), r) == join(p, join(q, r)));
    CHECK(join(p, meet(p, q)) == p);
    CHECK(meet(p, join(p, q)) == p);
    CHECK(refines(p, q) == (meet(p, q) == p));
    CHECK(refines(p, q) == (join(p, q) == q));
    CHECK(block_count(meet(p, q)) >= std::max(block_count(p), block_count(q)));
    CHECK(block_count(join(p, q)) <= std::min(block_count(p), block_count(q)));
  }
}

TEST_CASE("pullback and restriction") {
  const Partition q = part({0, 0, 1});
  CHECK(pullback(q, {2, 0, 0, 1}) == part({0, 1, 1, 1}));
  CHECK(restrict_to(part({0, 0, 1}), {0, 2}) == Partition::discrete(2));
  CHECK(restrict_to(part({0, 0, 1}), {0, 1, 2}) == part({0, 0, 1}));
}

TEST_CASE("all_partitions enumerates the Bell numbers") {
  CHECK(all_partitions(0).size() == 1);
  CHECK(all_partitions(1).size() == 1);
  CHECK(all_partitions(2).size() == 2);
  CHECK(all_partitions(3).size() == 5);
  CHECK(all_partitions(4).size() == 15);
  CHECK(all_partitions(5).size() == 52);
}
