#include "clonedual/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "clonedual/clone_algebra.hpp"
#include "clonedual/duality.hpp"
#include "clonedual/enumerate.hpp"
#include "clonedual/errors.hpp"
#include "clonedual/finspace.hpp"
#include "clonedual/galois_hyper.hpp"
#include "clonedual/partition.hpp"
#include "clonedual/tower.hpp"

namespace clonedual {

namespace {

constexpr std::size_t kMaxCounterexamples = 3;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Recorder {
 public:
  explicit Recorder(std::string id) { result_.id = std::move(id); }

  void expect(bool ok, const std::function<std::string()>& instance,
              const std::function<std::string()>& detail) {
    ++result_.instances;
    if (!ok) {
      ++result_.failed;
      if (result_.failures.size() < kMaxCounterexamples) {
        result_.failures.push_back({instance(), detail()});
      }
    }
  }

  void expect(bool ok, const std::string& instance, const std::string& detail) {
    expect(
        ok, [&] { return instance; }, [&] { return detail; });
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string render_indices(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

std::string render_labels(const Labeling& ell) {
  std::string out = "[";
  for (std::size_t i = 0; i < ell.index_size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ell[i]);
  }
  return out + "]";
}

std::string render_space(const FinSpace& x) {
  std::string out = std::to_string(x.point_count()) + " points, generators";
  for (const Partition& g : x.generators()) out += " " + to_string(g);
  return out;
}

std::string render_tower(const Tower& t) {
  std::string out = "levels";
  for (std::size_t s : t.level_sizes()) out += " " + std::to_string(s);
  out += "; bonds";
  for (const auto& bond : t.bonds()) {
    out += " [";
    for (std::size_t i = 0; i < bond.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(bond[i]);
    }
    out += "]";
  }
  return out;
}

std::mt19937_64 check_rng(std::uint64_t seed, const std::string& check_id) {
  return std::mt19937_64(seed ^ fnv1a(check_id));
}

// ---------------------------------------------------------------------------
// Instance pools

struct PoolLimits {
  std::size_t max_points;
  std::size_t max_generators;
  std::size_t random_count;
};

PoolLimits limits(Budget b) {
  return b == Budget::full ? PoolLimits{5, 3, 10000} : PoolLimits{4, 2, 200};
}

// Every space with the given point bound whose generators form a multiset of
// at most max_generators partitions, drawn exhaustively from the canonical
// pool of all partitions of the point set.
std::vector<FinSpace> space_pool(std::size_t max_points,
                                 std::size_t max_generators) {
  std::vector<FinSpace> out;
  for (std::size_t n = 0; n <= max_points; ++n) {
    const std::vector<Partition> pool = all_partitions(n);
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (!chosen.empty()) {
        std::vector<Partition> gens;
        gens.reserve(chosen.size());
        for (std::size_t idx : chosen) gens.push_back(pool[idx]);
        out.emplace_back(n, std::move(gens));
      }
      if (chosen.size() == max_generators) return;
      for (std::size_t i = start; i < pool.size(); ++i) {
        chosen.push_back(i);
        self(self, i);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::vector<FinAlgebra> algebra_pool(std::size_t max_index) {
  std::vector<FinAlgebra> out;
  for (std::size_t n = 0; n <= max_index; ++n) {
    for (const Partition& kernel : all_partitions(n)) {
      out.emplace_back(n, kernel);
    }
  }
  return out;
}

std::vector<Tower> tower_pool(Budget b) {
  return b == Budget::full ? all_towers(3, 3) : all_towers(2, 3);
}

// Pruned subtrees of a tower correspond to its nonempty top-level subsets
// (image compatibility determines every level from the top one).
SubTree pruned_subtree_from_top(const Tower& tower,
                                const std::vector<std::size_t>& top) {
  return delta(principal_family(tower, top));
}

// ---------------------------------------------------------------------------
// partition-laws suite

CheckResult check_lattice_laws(std::uint64_t seed, Budget budget) {
  Recorder rec("lattice-laws");
  const std::size_t pair_limit = budget == Budget::full ? 5 : 4;
  const std::size_t triple_limit = budget == Budget::full ? 4 : 3;

  auto pair_laws = [&](const Partition& p, const Partition& q,
                       const std::string& instance) {
    rec.expect(meet(p, q) == meet(q, p), instance, "meet not commutative");
    rec.expect(join(p, q) == join(q, p), instance, "join not commutative");
    rec.expect(meet(p, p) == p, instance, "meet not idempotent");
    rec.expect(join(p, p) == p, instance, "join not idempotent");
    rec.expect(join(p, meet(p, q)) == p, instance, "absorption join(p, meet(p,q)) != p");
    rec.expect(meet(p, join(p, q)) == p, instance, "absorption meet(p, join(p,q)) != p");
    rec.expect(meet(p, Partition::coarsest(p.ground_size())) == p, instance,
               "one-block partition is not the meet identity");
    rec.expect(join(p, Partition::discrete(p.ground_size())) == p, instance,
               "discrete partition is not the join identity");
  };
  auto triple_laws = [&](const Partition& p, const Partition& q,
                         const Partition& r, const std::string& instance) {
    rec.expect(meet(meet(p, q), r) == meet(p, meet(q, r)), instance,
               "meet not associative");
    rec.expect(join(join(p, q), r) == join(p, join(q, r)), instance,
               "join not associative");
  };

  for (std::size_t n = 0; n <= pair_limit; ++n) {
    const auto pool = all_partitions(n);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = 0; j < pool.size(); ++j) {
        pair_laws(pool[i], pool[j],
                  "n=" + std::to_string(n) + " p=" + to_string(pool[i]) +
                      " q=" + to_string(pool[j]));
      }
    }
  }
  for (std::size_t n = 0; n <= triple_limit; ++n) {
    const auto pool = all_partitions(n);
    for (const Partition& p : pool) {
      for (const Partition& q : pool) {
        for (const Partition& r : pool) {
          triple_laws(p, q, r,
                      "n=" + std::to_string(n) + " p=" + to_string(p) +
                          " q=" + to_string(q) + " r=" + to_string(r));
        }
      }
    }
  }

  auto rng = check_rng(seed, "lattice-laws");
  std::uniform_int_distribution<std::size_t> size(0, 10);
  for (std::size_t trial = 0; trial < limits(budget).random_count; ++trial) {
    const std::size_t n = size(rng);
    const Partition p = random_partition(rng, n);
    const Partition q = random_partition(rng, n);
    const Partition r = random_partition(rng, n);
    const std::string instance = "random trial " + std::to_string(trial) +
                                 " p=" + to_string(p) + " q=" + to_string(q) +
                                 " r=" + to_string(r);
    pair_laws(p, q, instance);
    triple_laws(p, q, r, instance);
  }
  return rec.take();
}

CheckResult check_refines_meet_join(std::uint64_t seed, Budget budget) {
  Recorder rec("refines-meet-join");
  auto laws = [&](const Partition& p, const Partition& q,
                  const std::string& instance) {
    const bool r = refines(p, q);
    rec.expect(r == (meet(p, q) == p), instance,
               "refines(p,q) disagrees with meet(p,q) == p");
    rec.expect(r == (join(p, q) == q), instance,
               "refines(p,q) disagrees with join(p,q) == q");
    rec.expect(refines(Partition::discrete(p.ground_size()), q), instance,
               "discrete partition fails to refine");
    rec.expect(refines(p, Partition::coarsest(p.ground_size())), instance,
               "one-block partition fails to coarsen");
  };
  const std::size_t n_limit = budget == Budget::full ? 5 : 4;
  for (std::size_t n = 0; n <= n_limit; ++n) {
    const auto pool = all_partitions(n);
    for (const Partition& p : pool) {
      for (const Partition& q : pool) {
        laws(p, q, "n=" + std::to_string(n) + " p=" + to_string(p) + " q=" + to_string(q));
      }
    }
  }
  auto rng = check_rng(seed, "refines-meet-join");
  std::uniform_int_distribution<std::size_t> size(0, 10);
  for (std::size_t trial = 0; trial < limits(budget).random_count; ++trial) {
    const std::size_t n = size(rng);
    const Partition p = random_partition(rng, n);
    const Partition q = random_partition(rng, n);
    laws(p, q, "random trial " + std::to_string(trial) + " p=" + to_string(p) +
                   " q=" + to_string(q));
  }
  return rec.take();
}

CheckResult check_block_count_bounds(std::uint64_t seed, Budget budget) {
  Recorder rec("block-count-bounds");
  auto laws = [&](const Partition& p, const Partition& q,
                  const std::string& instance) {
    rec.expect(block_count(meet(p, q)) >=
                   std::max(block_count(p), block_count(q)),
               instance, "meet has fewer blocks than an argument");
    rec.expect(block_count(join(p, q)) <=
                   std::min(block_count(p), block_count(q)),
               instance, "join has more blocks than an argument");
  };
  const std::size_t n_limit = budget == Budget::full ? 5 : 4;
  for (std::size_t n = 0; n <= n_limit; ++n) {
    const auto pool = all_partitions(n);
    for (const Partition& p : pool) {
      for (const Partition& q : pool) {
        laws(p, q, "n=" + std::to_string(n) + " p=" + to_string(p) + " q=" + to_string(q));
      }
    }
  }
  auto rng = check_rng(seed, "block-count-bounds");
  std::uniform_int_distribution<std::size_t> size(0, 10);
  for (std::size_t trial = 0; trial < limits(budget).random_count; ++trial) {
    const std::size_t n = size(rng);
    laws(random_partition(rng, n), random_partition(rng, n),
         "random trial " + std::to_string(trial));
  }
  return rec.take();
}

CheckResult check_canonical_form(std::uint64_t seed, Budget budget) {
  Recorder rec("canonical-form");
  // Equal as set-partitions iff equal canonical block-id sequences.
  const std::size_t n_limit = budget == Budget::full ? 5 : 4;
  for (std::size_t n = 0; n <= n_limit; ++n) {
    const auto pool = all_partitions(n);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = 0; j < pool.size(); ++j) {
        const bool same_sets = pool[i].blocks() == pool[j].blocks();
        rec.expect((pool[i] == pool[j]) == same_sets,
                   "n=" + std::to_string(n) + " p=" + to_string(pool[i]) +
                       " q=" + to_string(pool[j]),
                   "canonical equality disagrees with block-set equality");
      }
    }
  }
  // Relabeling block ids arbitrarily does not change the canonical form.
  auto rng = check_rng(seed, "canonical-form");
  std::uniform_int_distribution<std::size_t> size(0, 10);
  std::uniform_int_distribution<std::size_t> offset(1, 1000);
  for (std::size_t trial = 0; trial < limits(budget).random_count; ++trial) {
    const std::size_t n = size(rng);
    const Partition p = random_partition(rng, n);
    std::vector<std::size_t> relabel(p.block_count());
    for (auto& v : relabel) v = offset(rng) * (p.block_count() + 1);
    for (std::size_t b = 0; b < relabel.size(); ++b) relabel[b] += b;
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<std::size_t> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = relabel[p.block_of(i)];
    rec.expect(Partition::from_block_ids(raw) == p,
               "random trial " + std::to_string(trial) + " p=" + to_string(p),
               "relabeled copy canonicalizes differently");
  }
  return rec.take();
}

// ---------------------------------------------------------------------------
// pair-inject suite

CheckResult check_pair_inject_kernel(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("pair-inject-kernel");
  const std::size_t max_index = budget == Budget::full ? 4 : 3;
  for (std::size_t n = 0; n <= max_index; ++n) {
    std::vector<Labeling> all;
    std::vector<std::uint64_t> labels(n, 0);
    while (true) {
      all.emplace_back(labels);
      std::size_t pos = n;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++labels[pos] < 3) {
          done = false;
          break;
        }
        labels[pos] = 0;
      }
      if (done) break;
    }
    for (const Labeling& l1 : all) {
      for (const Labeling& l2 : all) {
        const Labeling enc = pair_inject({l1, l2});
        rec.expect(kernel(enc) == meet(kernel(l1), kernel(l2)),
                   "n=" + std::to_string(n) + " l1=" + render_labels(l1) +
                       " l2=" + render_labels(l2),
                   "kernel of the pairing differs from the kernel meet");
      }
    }
    // Ternary encodings on the smaller index sets.
    if (n <= 3 && budget == Budget::full) {
      for (const Labeling& l1 : all) {
        for (const Labeling& l2 : all) {
          for (const Labeling& l3 : all) {
            const Labeling enc = pair_inject({l1, l2, l3});
            rec.expect(
                kernel(enc) == meet(meet(kernel(l1), kernel(l2)), kernel(l3)),
                "n=" + std::to_string(n) + " l1=" + render_labels(l1) +
                    " l2=" + render_labels(l2) + " l3=" + render_labels(l3),
                "ternary pairing kernel differs from the kernel meet");
          }
        }
      }
    }
  }
  return rec.take();
}

CheckResult check_injective_lifting(std::uint64_t seed, Budget budget) {
  Recorder rec("injective-lifting");
  auto rng = check_rng(seed, "injective-lifting");
  const std::size_t trials = budget == Budget::full ? 400 : 60;
  std::uniform_int_distribution<std::size_t> index(1, 6);
  std::uniform_int_distribution<std::size_t> arity_pick(1, 2);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = index(rng);
    const std::size_t arity = arity_pick(rng);
    std::vector<Labeling> args;
    for (std::size_t a = 0; a < arity; ++a) {
      args.push_back(random_labeling(rng, n, 4));
    }
    // Injective fragment: distinct values on a few random tuples, fresh
    // labels (distinct by construction) everywhere else.
    OpTable op;
    op.arity = arity;
    std::uniform_int_distribution<std::uint64_t> label(0, 3);
    std::uniform_int_distribution<std::size_t> entry_count(0, 3);
    std::uint64_t value = 100;
    for (std::size_t e = entry_count(rng); e > 0; --e) {
      std::vector<std::uint64_t> tuple(arity);
      for (auto& t : tuple) t = label(rng);
      op.entries.emplace(tuple, value++);
    }
    const Labeling result = apply_op(op, args);
    Partition expected = kernel(args[0]);
    for (std::size_t a = 1; a < arity; ++a) {
      expected = meet(expected, kernel(args[a]));
    }
    std::string instance = "trial " + std::to_string(trial) + " args";
    for (const auto& a : args) instance += " " + render_labels(a);
    rec.expect(kernel(result) == expected, instance,
               "injective fragment does not preserve tuple distinctness");
  }
  return rec.take();
}

// ---------------------------------------------------------------------------
// duality-thm-1.2 suite

CheckResult check_unit_dense(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("unit-dense");
  const PoolLimits lim = limits(budget);
  for (const FinSpace& x : space_pool(lim.max_points, lim.max_generators)) {
    rec.expect(has_dense_image(unit_c(x)), render_space(x),
               "evaluation map misses a spectrum block");
  }
  return rec.take();
}

CheckResult check_unit_injective(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("unit-injective-iff-separated");
  const PoolLimits lim = limits(budget);
  for (const FinSpace& x : space_pool(lim.max_points, lim.max_generators)) {
    const UniformMap c = unit_c(x);
    std::set<std::size_t> image(c.values().begin(), c.values().end());
    const bool injective = image.size() == x.point_count();
    rec.expect(injective == is_separated(x), render_space(x),
               "injectivity of the evaluation map disagrees with separation");
  }
  return rec.take();
}

CheckResult check_unit_bijective(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("unit-bijective-iff-separated");
  const PoolLimits lim = limits(budget);
  for (const FinSpace& x : space_pool(lim.max_points, lim.max_generators)) {
    const UniformMap c = unit_c(x);
    std::set<std::size_t> image(c.values().begin(), c.values().end());
    const bool bijective = image.size() == x.point_count() &&
                           image.size() == c.target().point_count();
    rec.expect(bijective == is_separated(x), render_space(x),
               "bijectivity of the evaluation map disagrees with separation");
  }
  return rec.take();
}

CheckResult check_counit_iso(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("counit-iso");
  const PoolLimits lim = limits(budget);
  for (const FinAlgebra& l : algebra_pool(lim.max_points)) {
    const AlgHom rho = counit_rho(l);
    const std::string instance = "index " + std::to_string(l.index_size()) +
                                 " kernel " + to_string(l.finest_kernel());
    rec.expect(is_isomorphism(rho), instance,
               "representation hom is not an isomorphism");
    // The element action must be the representation l -> (phi -> phi(l)).
    for (const Labeling& ell : members_over_alphabet(l, 2)) {
      const Labeling image = apply_hom(rho, ell);
      bool ok = true;
      for (std::size_t b = 0; b < l.block_count(); ++b) {
        ok = ok && image[b] == evaluate(l, b, ell);
      }
      rec.expect(ok, instance + " member " + render_labels(ell),
                 "representation action disagrees with evaluation");
    }
  }
  return rec.take();
}

CheckResult check_spectrum_homomorphism(std::uint64_t seed, Budget budget) {
  Recorder rec("spectrum-homomorphism");
  auto rng = check_rng(seed, "spectrum-homomorphism");
  const std::size_t trials = budget == Budget::full ? 400 : 60;
  std::uniform_int_distribution<std::size_t> index(0, 5);
  std::uniform_int_distribution<std::size_t> arity_pick(1, 2);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = index(rng);
    const FinAlgebra l(n, random_partition(rng, n));
    const std::size_t arity = arity_pick(rng);
    std::vector<Labeling> args;
    for (std::size_t a = 0; a < arity; ++a) {
      args.push_back(member_from_block_values(
          l, random_labeling(rng, l.block_count(), 3).labels()));
    }
    // Fix the fragment once so every evaluation reads one function.
    const OpTable table = extend_for(OpTable{.arity = arity}, args);
    const Labeling result = apply_op(table, args);
    rec.expect(contains(l, result),
               "trial " + std::to_string(trial) + " kernel " +
                   to_string(l.finest_kernel()),
               "members are not closed under the operation");
    for (std::size_t b = 0; b < l.block_count(); ++b) {
      std::vector<std::uint64_t> tuple(arity);
      for (std::size_t a = 0; a < arity; ++a) {
        tuple[a] = evaluate(l, b, args[a]);
      }
      rec.expect(evaluate(l, b, result) == table.entries.at(tuple),
                 "trial " + std::to_string(trial) + " block " + std::to_string(b),
                 "evaluation does not commute with the operation");
    }
  }
  return rec.take();
}

// ---------------------------------------------------------------------------
// duality-thm-1.3 suite

CheckResult check_naturality_space_suite(std::uint64_t seed, Budget budget) {
  Recorder rec("naturality-space");
  auto rng = check_rng(seed, "naturality-space");
  const std::size_t trials = budget == Budget::full ? 1000 : 100;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const FinSpace x = random_space(rng, 6, 3);
    const FinSpace y = random_space(rng, 6, 3);
    const UniformMap f = random_uniform_map(rng, x, y);
    rec.expect(check_naturality_space(f),
               [&] {
                 return "trial " + std::to_string(trial) + ": " +
                        render_space(x) + " -> " + render_space(y);
               },
               [] { return std::string("space naturality square does not commute"); });
  }
  return rec.take();
}

CheckResult check_naturality_alg_suite(std::uint64_t seed, Budget budget) {
  Recorder rec("naturality-alg");
  auto rng = check_rng(seed, "naturality-alg");
  const std::size_t trials = budget == Budget::full ? 1000 : 100;
  std::uniform_int_distribution<std::size_t> index(1, 6);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t sn = index(rng);
    const FinAlgebra source(sn, random_partition(rng, sn));
    const std::size_t tn = index(rng);
    const FinAlgebra target(tn, random_partition(rng, tn));
    const AlgHom phi = random_hom(rng, source, target);
    rec.expect(check_naturality_alg(phi),
               [&] {
                 return "trial " + std::to_string(trial) + ": kernels " +
                        to_string(source.finest_kernel()) + " -> " +
                        to_string(target.finest_kernel());
               },
               [] { return std::string("algebra naturality square does not commute"); });
  }
  return rec.take();
}

CheckResult check_unit_counit_suite(std::uint64_t seed, Budget budget) {
  Recorder rec("unit-counit");
  auto rng = check_rng(seed, "unit-counit");
  const std::size_t trials = budget == Budget::full ? 1000 : 100;
  std::uniform_int_distribution<std::size_t> index(0, 6);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = index(rng);
    const FinAlgebra l(n, random_partition(rng, n));
    const FinSpace x = separated_quotient(random_space(rng, 6, 3)).space;
    rec.expect(check_unit_counit(l, x),
               [&] {
                 return "trial " + std::to_string(trial) + ": kernel " +
                        to_string(l.finest_kernel()) + ", space " +
                        render_space(x);
               },
               [] { return std::string("a unit/counit composite is not the identity"); });
  }
  return rec.take();
}

CheckResult check_functoriality(std::uint64_t seed, Budget budget) {
  Recorder rec("functoriality");
  auto rng = check_rng(seed, "functoriality");
  const std::size_t trials = budget == Budget::full ? 400 : 60;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const FinSpace x = random_space(rng, 6, 2);
    const FinSpace y = random_space(rng, 6, 2);
    const FinSpace z = random_space(rng, 6, 2);
    const UniformMap f = random_uniform_map(rng, x, y);
    const UniformMap g = random_uniform_map(rng, y, z);
    const std::string instance = "trial " + std::to_string(trial);
    rec.expect(b_on_map(identity_map(x)) == identity_hom(b_functor(x)),
               instance, "identity map is not sent to the identity hom");
    rec.expect(b_on_map(compose(f, g)) == compose(b_on_map(g), b_on_map(f)),
               instance, "map composition is not reversed by the algebra functor");
    const AlgHom phi = b_on_map(f);
    const AlgHom psi = b_on_map(g);
    rec.expect(z_on_hom(identity_hom(b_functor(x))) ==
                   identity_map(spectrum(b_functor(x))),
               instance, "identity hom is not sent to the identity map");
    rec.expect(z_on_hom(compose(psi, phi)) ==
                   compose(z_on_hom(phi), z_on_hom(psi)),
               instance, "hom composition is not reversed by the spectrum functor");
  }
  return rec.take();
}

// ---------------------------------------------------------------------------
// closure-thm-2.1 suite

CheckResult check_closure_spectrum(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("closure-spectrum");
  const std::size_t max_index = budget == Budget::full ? 4 : 3;
  for (const FinAlgebra& l : algebra_pool(max_index)) {
    const FinSpace z = spectrum(l);
    const auto subsets = all_subsets(l.block_count());
    for (const auto& points : subsets) {
      const ClosedSet s(z, points);
      const ClosedSet closed = closure_D(s, l);
      const std::string instance = "kernel " + to_string(l.finest_kernel()) +
                                   " subset " + render_indices(points);
      rec.expect(closed == s, instance,
                 "closure through the kernel route differs from the "
                 "topological closure (the set itself)");
    }
    // Monotonicity across nested subsets.
    for (const auto& small_pts : subsets) {
      for (const auto& big : subsets) {
        if (!std::includes(big.begin(), big.end(), small_pts.begin(),
                           small_pts.end())) {
          continue;
        }
        const auto closed_small = closure_D(ClosedSet(z, small_pts), l).points();
        const auto closed_big = closure_D(ClosedSet(z, big), l).points();
        rec.expect(std::includes(closed_big.begin(), closed_big.end(),
                                 closed_small.begin(), closed_small.end()),
                   "kernel " + to_string(l.finest_kernel()) + " subsets " +
                       render_indices(small_pts) + " within " + render_indices(big),
                   "closure is not monotone");
      }
    }
  }
  return rec.take();
}

// Independent route for the tower closure: mark ancestors of every point,
// then delete childless nodes until nothing changes.
SubTree downward_closure_oracle(const Tower& tower,
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
        marked[n] = std::move(kept);
        changed = true;
      }
    }
  }
  bool any_empty = false;
  for (const auto& level : marked) any_empty = any_empty || level.empty();
  if (any_empty) return SubTree::empty(tower);
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(d + 1);
  for (const auto& level : marked) sets.emplace_back(level.begin(), level.end());
  return SubTree(tower, std::move(sets));
}

CheckResult check_closure_tower(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("closure-tower");
  for (const Tower& tower : tower_pool(budget)) {
    const auto subsets = all_subsets(tower.level_size(tower.depth()));
    for (const auto& points : subsets) {
      const SubTree via_congruences = tower_closure_D(tower, points);
      const SubTree via_sweep = downward_closure_oracle(tower, points);
      const std::string instance =
          render_tower(tower) + " points " + render_indices(points);
      rec.expect(via_congruences == via_sweep, instance,
                 "congruence-route closure differs from pruned downward closure");
      if (!via_congruences.is_empty()) {
        const auto& top = via_congruences.level(tower.depth());
        rec.expect(std::includes(top.begin(), top.end(), points.begin(),
                                 points.end()),
                   instance, "closure does not contain the given points");
        rec.expect(tower_closure_D(tower, top) == via_congruences, instance,
                   "closure is not idempotent");
      }
    }
  }
  return rec.take();
}

// ---------------------------------------------------------------------------
// galois-thm-2.6 suite

CheckResult check_pc_h_homeo_suite(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("pc-h-homeo");
  const std::size_t max_index = budget == Budget::full ? 4 : 3;
  for (const FinAlgebra& l : algebra_pool(max_index)) {
    rec.expect(check_pc_h_homeo(l),
               "index " + std::to_string(l.index_size()) + " kernel " +
                   to_string(l.finest_kernel()),
               "restricted Galois maps fail the homeomorphism chain");
  }
  return rec.take();
}

CheckResult check_galois_closure_laws(std::uint64_t seed, Budget budget) {
  Recorder rec("galois-closure-laws");
  auto rng = check_rng(seed, "galois-closure-laws");
  const std::size_t trials = budget == Budget::full ? 300 : 50;
  std::uniform_int_distribution<std::size_t> index(0, 5);
  std::uniform_int_distribution<std::size_t> pair_count(0, 4);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = index(rng);
    const FinAlgebra l(n, random_partition(rng, n));
    std::vector<std::pair<Labeling, Labeling>> pairs;
    const std::size_t count = pair_count(rng);
    for (std::size_t i = 0; i < count; ++i) {
      pairs.emplace_back(member_from_block_values(
                             l, random_labeling(rng, l.block_count(), 3).labels()),
                         member_from_block_values(
                             l, random_labeling(rng, l.block_count(), 3).labels()));
    }
    const PairSet r(l, pairs);
    const PartCongruence c = closure_C(r);
    const std::string instance = "trial " + std::to_string(trial) + " kernel " +
                                 to_string(l.finest_kernel());
    // Extensive: every listed pair is related by the closure.
    bool extensive = true;
    for (const auto& [a, b] : r.pairs()) {
      extensive = extensive && congruence_kernel_pairs(c, a, b);
    }
    rec.expect(extensive, instance, "closure C is not extensive");
    // Idempotent: C of a closed congruence is itself.
    rec.expect(galois_g(galois_f(c), l) == c, instance,
               "closure C is not idempotent");
    // Monotone: adding pairs shrinks the support (finer goes to coarser).
    if (!pairs.empty()) {
      std::vector<std::pair<Labeling, Labeling>> fewer(pairs.begin(),
                                                       pairs.end() - 1);
      const PartCongruence c_fewer = closure_C(PairSet(l, fewer));
      rec.expect(std::includes(c_fewer.support().begin(), c_fewer.support().end(),
                               c.support().begin(), c.support().end()),
                 instance, "closure C is not monotone");
    }
    // D side: extensive and idempotent on a random subset of the spectrum.
    std::vector<std::size_t> points;
    for (std::size_t b = 0; b < l.block_count(); ++b) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) points.push_back(b);
    }
    const ClosedSet s(spectrum(l), points);
    const ClosedSet d_s = closure_D(s, l);
    rec.expect(std::includes(d_s.points().begin(), d_s.points().end(),
                             s.points().begin(), s.points().end()),
               instance, "closure D is not extensive");
    rec.expect(closure_D(d_s, l) == d_s, instance, "closure D is not idempotent");
  }
  return rec.take();
}

CheckResult check_hyperspace_generators(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("hyperspace-generators");
  const std::size_t max_points = budget == Budget::full ? 5 : 4;
  for (const FinSpace& x : space_pool(max_points, 2)) {
    if (x.point_count() == 0) continue;
    const FinSpace h = hyperspace(x);
    const std::string instance = render_space(x);
    rec.expect(h.point_count() ==
                   (std::size_t{1} << x.point_count()) - 1,
               instance, "hyperspace point count is not 2^n - 1");
    // Two subsets fall in one generator block iff they meet the same blocks.
    const auto subsets = nonempty_subsets(x.point_count());
    for (std::size_t g = 0; g < x.generators().size(); ++g) {
      const Partition& e = x.generators()[g];
      const Partition& ebar = h.generators()[g];
      bool ok = true;
      for (std::size_t i = 0; i < subsets.size() && ok; ++i) {
        for (std::size_t j = 0; j < subsets.size() && ok; ++j) {
          std::set<std::size_t> mi, mj;
          for (std::size_t p : subsets[i]) mi.insert(e.block_of(p));
          for (std::size_t p : subsets[j]) mj.insert(e.block_of(p));
          ok = ((ebar.block_of(i) == ebar.block_of(j)) == (mi == mj));
        }
      }
      rec.expect(ok, instance + " generator " + std::to_string(g),
                 "hyperspace generator disagrees with the blocks-met grouping");
    }
  }
  return rec.take();
}

// ---------------------------------------------------------------------------
// tower-thm-2.4 suite

CheckResult check_gamma_delta(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("gamma-delta-inverse");
  for (const Tower& tower : tower_pool(budget)) {
    for (const auto& top : nonempty_subsets(tower.level_size(tower.depth()))) {
      const SubTree t = pruned_subtree_from_top(tower, top);
      const std::string instance =
          render_tower(tower) + " top " + render_indices(top);
      rec.expect(is_pruned(t), instance, "delta output is not pruned");
      rec.expect(delta(gamma(t)) == t, instance, "delta(gamma(t)) != t");
      const auto family = gamma(t);
      rec.expect(gamma(delta(family)) == family, instance,
                 "gamma(delta(family)) != family");
    }
    // Incompatible families are rejected with the offending level.
    if (tower.depth() >= 1 && tower.level_size(0) >= 2) {
      std::vector<LevelCongruence> bad;
      for (std::size_t n = 0; n <= tower.depth(); ++n) {
        std::vector<std::size_t> support(tower.level_size(n));
        for (std::size_t i = 0; i < support.size(); ++i) support[i] = i;
        if (n == 0) support.pop_back();  // drop one root while level 1 stays full
        bad.emplace_back(tower, n, std::move(support));
      }
      bool rejected = false;
      std::size_t at_level = 0;
      try {
        delta(bad);
      } catch (const IncompatibleFamilyError& e) {
        rejected = true;
        at_level = e.level;
      }
      rec.expect(rejected && at_level == 0, render_tower(tower),
                 "incompatible family was not rejected at the first bad level");
    }
  }
  return rec.take();
}

CheckResult check_density(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("density-2.4");
  for (const Tower& tower : tower_pool(budget)) {
    for (const auto& top : nonempty_subsets(tower.level_size(tower.depth()))) {
      const SubTree t = pruned_subtree_from_top(tower, top);
      const auto thread = gamma(t);
      for (std::size_t n = 0; n <= tower.depth(); ++n) {
        const LevelCongruence witness = density_witness(t, n);
        const auto witness_family = principal_family(tower, witness.support());
        bool agrees = true;
        for (std::size_t k = 0; k <= n; ++k) {
          agrees = agrees &&
                   witness_family[k].support() == thread[k].support();
        }
        rec.expect(agrees,
                   render_tower(tower) + " top " + render_indices(top) +
                       " level " + std::to_string(n),
                   "principal witness does not agree with the thread below the level");
      }
    }
  }
  return rec.take();
}

// ---------------------------------------------------------------------------
// supercomplete-thm-2.8 suite

CheckResult check_hyper_complete(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("hyper-complete");
  for (const Tower& tower : tower_pool(budget)) {
    rec.expect(hyper_complete_check(tower), render_tower(tower),
               "a compatible family is not realized by a pruned subtree");
  }
  return rec.take();
}

CheckResult check_supercomplete_separated(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("supercomplete-separated");
  const PoolLimits lim = limits(budget);
  for (const FinSpace& x : space_pool(lim.max_points, lim.max_generators)) {
    rec.expect(is_supercomplete(x) == is_separated(x), render_space(x),
               "supercompleteness disagrees with separation on a finite presentation");
  }
  return rec.take();
}

// ---------------------------------------------------------------------------
// set-equality suite

CheckResult check_set_equality(std::uint64_t /*seed*/, Budget budget) {
  Recorder rec("set-equality-functions");
  const std::uint64_t universe = budget == Budget::full ? 4 : 3;
  const std::size_t max_len = budget == Budget::full ? 5 : 4;
  std::vector<std::vector<std::uint64_t>> multisets;
  std::vector<std::uint64_t> current;
  auto build = [&](auto&& self, std::uint64_t min_label) -> void {
    multisets.push_back(current);
    if (current.size() == max_len) return;
    for (std::uint64_t v = min_label; v < universe; ++v) {
      current.push_back(v);
      self(self, v);
      current.pop_back();
    }
  };
  build(build, 0);
  for (const auto& a : multisets) {
    for (const auto& b : multisets) {
      const std::set<std::uint64_t> sa(a.begin(), a.end());
      const std::set<std::uint64_t> sb(b.begin(), b.end());
      rec.expect(set_equality_by_functions(a, b) == (sa == sb),
                 [&] {
                   return "a=" + render_labels(Labeling(a)) +
                          " b=" + render_labels(Labeling(b));
                 },
                 [] {
                   return std::string(
                       "function-pair criterion disagrees with literal set equality");
                 });
    }
  }
  return rec.take();
}

// ---------------------------------------------------------------------------
// registry

using CheckFn = CheckResult (*)(std::uint64_t, Budget);

struct CheckEntry {
  const char* id;
  CheckFn fn;
  const char* statement;
  const char* procedure;
};

const CheckEntry kChecks[] = {
    {"lattice-laws", check_lattice_laws,
     "Canonical partitions of a finite set form a lattice under refinement: "
     "meet (common refinement) and join (components of the merged relation) "
     "are commutative, associative, idempotent, absorptive, with the discrete "
     "and one-block partitions as units.",
     "Exhaustive sweep over all partition pairs (and triples for "
     "associativity) of small ground sets plus seeded random instances up to "
     "ground size 10."},
    {"refines-meet-join", check_refines_meet_join,
     "refines(p,q) holds iff meet(p,q) = p iff join(p,q) = q; the discrete "
     "partition refines everything and the one-block partition coarsens "
     "everything.",
     "Exhaustive partition pairs on small ground sets plus seeded random "
     "pairs up to ground size 10."},
    {"block-count-bounds", check_block_count_bounds,
     "The common refinement has at least as many blocks as either argument; "
     "the join has at most as many as either argument.",
     "Same sweep as the lattice laws."},
    {"canonical-form", check_canonical_form,
     "Canonicalization is a normal form: two partitions are equal as "
     "set-partitions iff their canonical block-id sequences are identical, "
     "and relabeling block ids never changes the canonical form.",
     "Exhaustive pairs compare canonical equality against block-set "
     "equality; random trials recanonicalize shuffled relabelings."},
    {"pair-inject-kernel", check_pair_inject_kernel,
     "Encoding a tuple of elements through an injective function collapses "
     "agreement exactly: the kernel of the injective pairing equals the meet "
     "of the argument kernels, so single-element agreement relations "
     "generate the spectrum uniformity.",
     "Exhaustive sweep over all labeling pairs (and ternary triples) over a "
     "3-letter alphabet on index sets up to size 4."},
    {"injective-lifting", check_injective_lifting,
     "An injective operation fragment lifts to an injective operation on "
     "labelings: applying it pointwise preserves distinctness of argument "
     "tuples.",
     "Seeded random fresh-default fragments applied to random labelings; the "
     "result kernel must equal the meet of the argument kernels."},
    {"unit-dense", check_unit_dense,
     "The evaluation map from a space into the spectrum of its algebra of "
     "uniformly continuous labelings always has dense image (it meets every "
     "block of every generator of the spectrum).",
     "Exhaustive sweep over all spaces with few points and generators drawn "
     "from the canonical partition pool."},
    {"unit-injective-iff-separated", check_unit_injective,
     "The evaluation map is injective exactly when the space is separated.",
     "Same exhaustive space pool; injectivity read off the value array."},
    {"unit-bijective-iff-separated", check_unit_bijective,
     "On finite presentations (complete once separated) the evaluation map "
     "is bijective exactly when the space is separated.",
     "Same exhaustive space pool; bijectivity read off the value array."},
    {"counit-iso", check_counit_iso,
     "The representation hom sending an element to its evaluation function "
     "is an isomorphism onto the algebra of uniformly continuous labelings "
     "of the spectrum, for every finite-index partitionable algebra.",
     "Exhaustive sweep over all finest kernels on small index sets; the "
     "block map must be a bijection and the element action must agree with "
     "evaluation on all members over a 2-letter alphabet."},
    {"spectrum-homomorphism", check_spectrum_homomorphism,
     "Every spectrum point is a homomorphism: evaluation commutes with "
     "every operation applied pointwise.",
     "Seeded random operation fragments, materialized once, applied to "
     "random members; evaluation is compared blockwise against the fragment."},
    {"naturality-space", check_naturality_space_suite,
     "For every uniformly continuous f the square Z(B(f)) o C = C o f "
     "commutes.",
     "Seeded random uniformly continuous maps between random spaces of at "
     "most 6 points; both composites are compared pointwise."},
    {"naturality-alg", check_naturality_alg_suite,
     "For every homomorphism phi the square B(Z(phi)) o rho = rho o phi "
     "commutes.",
     "Seeded random homs between random algebras; both composites are "
     "compared on all members over a 3-letter alphabet."},
    {"unit-counit", check_unit_counit_suite,
     "Z(rho) with the evaluation map of the spectrum, and B(C) with the "
     "representation hom of the function algebra, are mutually inverse.",
     "Seeded random algebras and separated spaces; all four composites are "
     "compared with identities."},
    {"functoriality", check_functoriality,
     "Both dual functors preserve identities and reverse composition.",
     "Seeded random composable map pairs and the induced hom pairs."},
    {"closure-spectrum", check_closure_spectrum,
     "The Galois closure f(g(S)) computed through kernels equals the "
     "topological closure of S in the spectrum; finite spectra are discrete, "
     "so it is S itself.  A point survives iff the intersection of the "
     "kernels over S is contained in its kernel.",
     "Exhaustive sweep over all subsets of the spectra of all algebras with "
     "at most 4 blocks, with monotonicity cross-checks."},
    {"closure-tower", check_closure_tower,
     "On truncated towers the closure of a set of top-level points computed "
     "through level congruences equals the pruned downward closure.",
     "Exhaustive sweep over all towers of depth and level sizes at most 3 "
     "and all top-level subsets; an independent mark-and-sweep oracle "
     "recomputes the closure."},
    {"pc-h-homeo", check_pc_h_homeo_suite,
     "The restricted Galois maps are mutually inverse uniform homeomorphisms "
     "between partitionable congruences and closed subsets of the spectrum: "
     "hyperspace entourage relatedness at an element, equality of its value "
     "sets, and equality of the restricted congruences all coincide.",
     "Exhaustive sweep over all algebras with at most 4 blocks, all pairs of "
     "closed sets, and all members over a 3-letter alphabet."},
    {"galois-closure-laws", check_galois_closure_laws,
     "C = g o f and D = f o g are closure operators: extensive, monotone, "
     "idempotent.",
     "Seeded random pair sets and point sets on random algebras with at most "
     "5 blocks."},
    {"hyperspace-generators", check_hyperspace_generators,
     "The hyperspace carries one generator per generator E of the base "
     "space, grouping nonempty subsets by the set of E-blocks they meet "
     "(plus the finest uniform partition's generator when not already "
     "listed).",
     "Exhaustive comparison with a brute-force blocks-met grouping over all "
     "subset pairs of pool spaces."},
    {"gamma-delta-inverse", check_gamma_delta,
     "Reading the level supports of a pruned subtree and assembling a "
     "subtree from a compatible support family are mutually inverse; "
     "incompatible families are rejected at the first bad level.",
     "Exhaustive sweep over all pruned subtrees of all pool towers (one per "
     "nonempty top-level subset) plus constructed incompatible families."},
    {"density-2.4", check_density,
     "Principal congruences are dense among locally partitionable ones: for "
     "every thread and every level there is a principal congruence agreeing "
     "with the thread at that level and below.",
     "For every pruned subtree and level, the top-level preimage of the "
     "level support is expanded to its level restrictions and compared with "
     "the thread."},
    {"hyper-complete", check_hyper_complete,
     "At desk scale every finite tower is supercomplete: every "
     "image-compatible family of nonempty level subsets is the thread of a "
     "pruned subtree (finitely branching trees carry full threads).",
     "Exhaustive enumeration of compatible families (via their top level) "
     "for every pool tower, sampled when the top level is large."},
    {"supercomplete-separated", check_supercomplete_separated,
     "On finite presentations supercompleteness coincides with separation: "
     "a separated finite space and its hyperspace are complete.",
     "Exhaustive space pool; is_supercomplete is compared with is_separated."},
    {"set-equality-functions", check_set_equality,
     "Two label multisets have equal underlying sets iff every pair of "
     "functions f, g from a finite sufficient family (all maps from the "
     "occurring labels plus one fresh label into a 2-element codomain, plus "
     "the identity) agrees on one multiset exactly when it agrees on the "
     "other.",
     "Exhaustive sweep over all multisets with at most 4 distinct labels and "
     "length at most 5, compared against literal set equality."},
};

const std::map<std::string, std::vector<std::string>>& suite_registry() {
  static const std::map<std::string, std::vector<std::string>> suites = {
      {"partition-laws",
       {"lattice-laws", "refines-meet-join", "block-count-bounds",
        "canonical-form"}},
      {"pair-inject", {"pair-inject-kernel", "injective-lifting"}},
      {"duality-thm-1.2",
       {"unit-dense", "unit-injective-iff-separated",
        "unit-bijective-iff-separated", "counit-iso", "spectrum-homomorphism"}},
      {"duality-thm-1.3",
       {"naturality-space", "naturality-alg", "unit-counit", "functoriality"}},
      {"closure-thm-2.1", {"closure-spectrum", "closure-tower"}},
      {"galois-thm-2.6",
       {"pc-h-homeo", "galois-closure-laws", "hyperspace-generators"}},
      {"tower-thm-2.4", {"gamma-delta-inverse", "density-2.4"}},
      {"supercomplete-thm-2.8", {"hyper-complete", "supercomplete-separated"}},
      {"set-equality", {"set-equality-functions"}},
  };
  return suites;
}

const CheckEntry* find_check(const std::string& id) {
  for (const CheckEntry& entry : kChecks) {
    if (id == entry.id) return &entry;
  }
  return nullptr;
}

}  // namespace

Budget budget_from_string(const std::string& name) {
  if (name == "small") return Budget::small;
  if (name == "full") return Budget::full;
  throw ValidationError("unknown budget '" + name + "' (expected small or full)");
}

std::string to_string(Budget b) {
  return b == Budget::full ? "full" : "small";
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::size_t Report::total_instances() const {
  std::size_t total = 0;
  for (const CheckResult& c : checks) total += c.instances;
  return total;
}

std::size_t Report::total_failed() const {
  std::size_t total = 0;
  for (const CheckResult& c : checks) total += c.failed;
  return total;
}

std::string Report::render() const {
  std::ostringstream out;
  out << "clonedual report format 1\n";
  out << "suite " << suite << "\n";
  out << "seed " << seed << "\n";
  out << "budget " << to_string(budget) << "\n";
  for (const CheckResult& c : checks) {
    out << "check " << c.id << " instances " << c.instances << " failures "
        << c.failed << " " << (c.passed() ? "pass" : "fail") << "\n";
    for (const CheckFailure& f : c.failures) {
      out << "  counterexample " << f.instance << " :: " << f.detail << "\n";
    }
  }
  std::size_t passed = 0;
  for (const CheckResult& c : checks) passed += c.passed() ? 1 : 0;
  out << "summary checks " << checks.size() << " passed " << passed
      << " failed " << checks.size() - passed << " instances "
      << total_instances() << "\n";
  return out.str();
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, ids] : suite_registry()) out.push_back(name);
  out.push_back("all");
  return out;
}

bool is_suite(const std::string& name) {
  return name == "all" || suite_registry().contains(name);
}

std::vector<std::string> checks_in_suite(const std::string& suite) {
  if (suite == "all") {
    std::vector<std::string> out;
    for (const CheckEntry& entry : kChecks) out.push_back(entry.id);
    return out;
  }
  auto it = suite_registry().find(suite);
  if (it == suite_registry().end()) {
    throw ValidationError("unknown suite '" + suite + "'");
  }
  return it->second;
}

Report run_suite(const std::string& suite, std::uint64_t seed, Budget budget) {
  const std::vector<std::string> ids = checks_in_suite(suite);
  Report report;
  report.suite = suite;
  report.seed = seed;
  report.budget = budget;
  for (const std::string& id : ids) {
    const CheckEntry* entry = find_check(id);
    report.checks.push_back(entry->fn(seed, budget));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
#ifdef CLONEDUAL_FAILURE_INJECTION
  if (!report.checks.empty()) {
    CheckResult& victim = report.checks[seed % report.checks.size()];
    victim.failed += 1;
    victim.failures.insert(victim.failures.begin(),
                           {"injected", "build-time fault injection"});
  }
#endif
  return report;
}

std::string explain(const std::string& check_id) {
  const CheckEntry* entry = find_check(check_id);
  if (entry == nullptr) {
    throw ValidationError("unknown check id '" + check_id + "'");
  }
  std::string out;
  out += check_id;
  out += "\nstatement: ";
  out += entry->statement;
  out += "\nprocedure: ";
  out += entry->procedure;
  out += "\n";
  return out;
}

std::vector<std::string> all_check_ids() {
  std::vector<std::string> out;
  for (const CheckEntry& entry : kChecks) out.push_back(entry.id);
  return out;
}

}  // namespace clonedual
