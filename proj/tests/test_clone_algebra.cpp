#include <doctest.h>

#include <random>

#include "clonedual/clone_algebra.hpp"
#include "clonedual/enumerate.hpp"
#include "clonedual/errors.hpp"
#include "oracles.hpp"

using namespace clonedual;

namespace {

Labeling lab(const std::vector<std::uint64_t>& xs) { return Labeling(xs); }

Partition part(const std::vector<std::size_t>& ids) {
  return Partition::from_block_ids(ids);
}

}  // namespace

TEST_CASE("kernel groups equal labels") {
  CHECK(kernel(lab({5, 9, 5})) == part({0, 1, 0}));
  CHECK(kernel(lab({7, 7, 7})) == Partition::coarsest(3));
  CHECK(kernel(lab({3, 1, 4})) == Partition::discrete(3));
  CHECK(kernel(lab({})) == Partition::discrete(0));
}

TEST_CASE("apply_op on explicit entries") {
  OpTable op;
  op.arity = 1;
  op.entries[{5}] = 7;
  op.entries[{9}] = 7;
  CHECK(oracle::apply_op_oracle(op, {lab({5, 9, 5})}) == lab({7, 7, 7}));
  CHECK(apply_op(op, {lab({5, 9, 5})}) == lab({7, 7, 7}));

  OpTable identity;
  identity.arity = 1;
  identity.entries[{5}] = 5;
  identity.entries[{9}] = 9;
  CHECK(apply_op(identity, {lab({5, 9, 5})}) == lab({5, 9, 5}));
}

TEST_CASE("apply_op fresh allocation") {
  OpTable op;
  op.arity = 2;
  const std::vector<Labeling> args = {lab({1, 1, 2}), lab({3, 4, 3})};
  // Oracle first: occupied labels are {1,2,3,4}; the unseen tuples in
  // lexicographic order are (1,3), (1,4), (2,3) and receive 0, 5, 6.
  const Labeling expected = oracle::apply_op_oracle(op, args);
  CHECK(expected == lab({0, 5, 6}));
  const Labeling got = apply_op(op, args);
  CHECK(got == expected);
  CHECK(kernel(got) == Partition::discrete(3));

  // Equal argument tuples share a label.
  const Labeling repeated = apply_op(op, {lab({1, 2, 1}), lab({3, 4, 3})});
  CHECK(repeated[0] == repeated[2]);

  // Constant default.
  OpTable constant;
  constant.arity = 1;
  constant.constant_default = 42;
  CHECK(apply_op(constant, {lab({5, 9, 5})}) == lab({42, 42, 42}));

  CHECK_THROWS_AS(apply_op(op, {lab({1, 2})}), SizeMismatchError);
  CHECK_THROWS_AS(apply_op(op, {lab({1, 2}), lab({1, 2, 3})}), SizeMismatchError);
}

TEST_CASE("apply_op matches the oracle on random fragments") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> index(0, 6);
  std::uniform_int_distribution<std::size_t> arity(1, 3);
  std::uniform_int_distribution<std::uint64_t> label(0, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    OpTable op;
    op.arity = arity(rng);
    if (coin(rng)) op.constant_default = label(rng);
    for (int e = coin(rng) * 2; e > 0; --e) {
      std::vector<std::uint64_t> tuple(op.arity);
      for (auto& t : tuple) t = label(rng);
      op.entries[tuple] = label(rng);
    }
    const std::size_t n = index(rng);
    std::vector<Labeling> args;
    for (std::size_t a = 0; a < op.arity; ++a) {
      args.push_back(random_labeling(rng, n, 6));
    }
    const Labeling got = apply_op(op, args);
    CHECK(got == oracle::apply_op_oracle(op, args));
    // The meet of the argument kernels refines the result kernel.
    Partition fine = kernel(args[0]);
    for (std::size_t a = 1; a < args.size(); ++a) {
      fine = meet(fine, kernel(args[a]));
    }
    CHECK(refines(fine, kernel(got)));
  }
}

TEST_CASE("pair_inject kernels are exact meets") {
  const Labeling l1 = lab({0, 0, 1});
  const Labeling l2 = lab({0, 1, 1});
  CHECK(oracle::meet_oracle(kernel(l1), kernel(l2)) == Partition::discrete(3));
  CHECK(kernel(pair_inject({l1, l2})) == Partition::discrete(3));
  CHECK(kernel(pair_inject({l1})) == kernel(l1));
  CHECK(pair_inject({l1}) == l1);
  CHECK(kernel(pair_inject({lab({4, 4}), lab({9, 9})})) ==
        Partition::coarsest(2));
  CHECK_THROWS_AS(pair_inject({}), ValidationError);
  CHECK_THROWS_AS(pair_inject({l1, lab({0, 1})}), SizeMismatchError);
  CHECK_THROWS_AS(pair_inject({lab({1u << 31, 5}), lab({1ull << 62, 6})}),
                  ValidationError);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> index(0, 7);
    const std::size_t n = index(rng);
    const Labeling a = random_labeling(rng, n, 4);
    const Labeling b = random_labeling(rng, n, 4);
    const Labeling c = random_labeling(rng, n, 4);
    CHECK(kernel(pair_inject({a, b, c})) ==
          meet(meet(kernel(a), kernel(b)), kernel(c)));
  }
}

TEST_CASE("generate and contains") {
  CHECK(generate(3, {lab({0, 0, 1})}).finest_kernel() == part({0, 0, 1}));
  CHECK(generate(3, {lab({0, 0, 1}), lab({0, 1, 1})}).finest_kernel() ==
        Partition::discrete(3));
  CHECK(generate(3, {lab({7, 7, 7})}).finest_kernel() == Partition::coarsest(3));
  CHECK_THROWS_AS(generate(3, {}), ValidationError);

  const FinAlgebra l(3, part({0, 0, 1}));
  CHECK(contains(l, lab({4, 4, 9})));
  CHECK_FALSE(contains(l, lab({4, 5, 9})));
  CHECK(contains(l, lab({6, 6, 6})));
  CHECK_THROWS_AS(contains(l, lab({1, 2})), SizeMismatchError);
}

TEST_CASE("spectrum") {
  const FinSpace z = spectrum(FinAlgebra(3, part({0, 0, 1})));
  CHECK(z.point_count() == 2);
  CHECK(is_separated(z));
  CHECK(spectrum(FinAlgebra(3, Partition::coarsest(3))).point_count() == 1);
  CHECK(spectrum(FinAlgebra(4, Partition::discrete(4))).point_count() == 4);
  CHECK(spectrum(FinAlgebra(0, Partition::discrete(0))).point_count() == 0);

  // spectrum(generate(...)) has one point per block of the kernel meet.
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> index(1, 6);
    const std::size_t n = index(rng);
    const Labeling a = random_labeling(rng, n, 3);
    const Labeling b = random_labeling(rng, n, 3);
    const FinAlgebra l = generate(n, {a, b});
    CHECK(spectrum(l).point_count() ==
          block_count(meet(kernel(a), kernel(b))));
  }
}

TEST_CASE("evaluate") {
  const FinAlgebra l(3, part({0, 0, 1}));
  const Labeling ell = lab({4, 4, 9});
  CHECK(evaluate(SpectrumPoint(l, 0), ell) == 4);
  CHECK(evaluate(SpectrumPoint(l, 1), ell) == 9);
  CHECK(evaluate(l, 0, lab({6, 6, 6})) == 6);
  CHECK(evaluate(l, 1, lab({6, 6, 6})) == 6);
  CHECK_THROWS_AS(evaluate(l, 0, lab({4, 5, 9})), MembershipError);
  CHECK_THROWS_AS(SpectrumPoint(l, 2), ValidationError);
}

TEST_CASE("congruence kernel pairs") {
  const FinAlgebra l(3, part({0, 0, 1}));
  const PartCongruence all(l, {0, 1});
  const PartCongruence none(l, {});
  const PartCongruence at0(l, {0});
  CHECK(congruence_kernel_pairs(all, lab({4, 4, 9}), lab({4, 4, 9})));
  CHECK_FALSE(congruence_kernel_pairs(all, lab({4, 4, 9}), lab({4, 4, 8})));
  CHECK(congruence_kernel_pairs(none, lab({4, 4, 9}), lab({5, 5, 8})));
  CHECK(congruence_kernel_pairs(at0, lab({4, 4, 9}), lab({4, 4, 8})));
  CHECK_FALSE(congruence_kernel_pairs(at0, lab({5, 5, 9}), lab({4, 4, 9})));
  CHECK_THROWS_AS(PartCongruence(l, {2}), ValidationError);
}

TEST_CASE("members are closed under operations") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> index(0, 6);
  std::uniform_int_distribution<std::size_t> arity(1, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = index(rng);
    const FinAlgebra l(n, random_partition(rng, n));
    OpTable op;
    op.arity = arity(rng);
    std::vector<Labeling> args;
    for (std::size_t a = 0; a < op.arity; ++a) {
      args.push_back(member_from_block_values(
          l, random_labeling(rng, l.block_count(), 4).labels()));
    }
    CHECK(contains(l, apply_op(op, args)));
  }
}

TEST_CASE("agreement congruences are compatible with fixed fragments") {
  // Materialize one fragment covering both argument lists, then apply it as
  // a fixed function: related arguments give related results.
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::size_t> index(1, 6);
  std::uniform_int_distribution<std::size_t> arity(1, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = index(rng);
    const FinAlgebra l(n, random_partition(rng, n));
    std::vector<std::size_t> support;
    for (std::size_t b = 0; b < l.block_count(); ++b) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) support.push_back(b);
    }
    const PartCongruence theta(l, support);
    const std::size_t ar = arity(rng);
    std::vector<Labeling> left, right;
    for (std::size_t a = 0; a < ar; ++a) {
      const Labeling x = member_from_block_values(
          l, random_labeling(rng, l.block_count(), 3).labels());
      // Related partner: copy x on the support, resample elsewhere.
      std::vector<std::uint64_t> values = block_values_of(l, x);
      for (std::size_t b = 0; b < values.size(); ++b) {
        const bool supported =
            std::binary_search(support.begin(), support.end(), b);
        if (!supported) {
          values[b] = random_labeling(rng, 1, 3)[0];
        }
      }
      left.push_back(x);
      right.push_back(member_from_block_values(l, values));
      REQUIRE(congruence_kernel_pairs(theta, left.back(), right.back()));
    }
    OpTable op;
    op.arity = ar;
    std::vector<Labeling> everything = left;
    everything.insert(everything.end(), right.begin(), right.end());
    OpTable fixed = op;
    fixed = extend_for(fixed, left);
    fixed = extend_for(fixed, right);
    CHECK(congruence_kernel_pairs(theta, apply_op(fixed, left),
                                  apply_op(fixed, right)));
  }
}

TEST_CASE("extend_for is stable across extensions") {
  OpTable op;
  op.arity = 1;
  const std::vector<Labeling> first = {lab({3, 1})};
  const OpTable once = extend_for(op, first);
  const std::vector<Labeling> second = {lab({3, 1, 8})};
  const OpTable twice = extend_for(once, second);
  for (const auto& [tuple, value] : once.entries) {
    CHECK(twice.entries.at(tuple) == value);
  }
  CHECK(apply_op(twice, first) == apply_op(once, first));
}
