#include "clonedual/clone_algebra.hpp"

#include <limits>
#include <set>
#include <string>
#include <utility>

#include "clonedual/errors.hpp"

namespace clonedual {

namespace {

void require_equal_sizes(const std::vector<Labeling>& args, const char* op) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i].index_size() != args[0].index_size()) {
      throw SizeMismatchError(std::string(op) + ": argument " +
                              std::to_string(i) + " has index size " +
                              std::to_string(args[i].index_size()) +
                              ", expected " +
                              std::to_string(args[0].index_size()));
    }
  }
}

std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  const unsigned __int128 v = s * (s + 1) / 2 + b;
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw ValidationError("pair_inject: label overflow in diagonal pairing");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Partition kernel(const Labeling& ell) {
  return Partition::from_labels(ell.labels());
}

OpTable extend_for(const OpTable& op, const std::vector<Labeling>& args) {
  if (op.arity < 1) {
    throw ValidationError("OpTable: arity must be >= 1");
  }
  if (args.size() != op.arity) {
    throw SizeMismatchError("apply_op: got " + std::to_string(args.size()) +
                            " arguments for an arity-" +
                            std::to_string(op.arity) + " table");
  }
  require_equal_sizes(args, "apply_op");
  for (const auto& [tuple, value] : op.entries) {
    if (tuple.size() != op.arity) {
      throw ValidationError("OpTable: entry tuple of length " +
                            std::to_string(tuple.size()) + " in an arity-" +
                            std::to_string(op.arity) + " table");
    }
  }

  OpTable out = op;
  const std::size_t n = args.empty() ? 0 : args[0].index_size();
  // std::set keeps the unseen tuples in lexicographic order.
  std::set<std::vector<std::uint64_t>> unseen;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> tuple(op.arity);
    for (std::size_t a = 0; a < op.arity; ++a) tuple[a] = args[a][i];
    if (!out.entries.contains(tuple)) unseen.insert(std::move(tuple));
  }
  if (unseen.empty()) return out;

  if (out.constant_default.has_value()) {
    for (const auto& tuple : unseen) {
      out.entries.emplace(tuple, *out.constant_default);
    }
    return out;
  }

  std::set<std::uint64_t> occupied;
  for (const Labeling& arg : args) {
    occupied.insert(arg.labels().begin(), arg.labels().end());
  }
  for (const auto& [tuple, value] : op.entries) {
    occupied.insert(tuple.begin(), tuple.end());
    occupied.insert(value);
  }
  std::uint64_t next = 0;
  for (const auto& tuple : unseen) {
    while (occupied.contains(next)) ++next;
    occupied.insert(next);
    out.entries.emplace(tuple, next);
  }
  return out;
}

Labeling apply_op(const OpTable& op, const std::vector<Labeling>& args) {
  const OpTable table = extend_for(op, args);
  const std::size_t n = args.empty() ? 0 : args[0].index_size();
  std::vector<std::uint64_t> result(n);
  std::vector<std::uint64_t> tuple(op.arity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < op.arity; ++a) tuple[a] = args[a][i];
    result[i] = table.entries.at(tuple);
  }
  return Labeling(std::move(result));
}

Labeling pair_inject(const std::vector<Labeling>& args) {
  if (args.empty()) {
    throw ValidationError("pair_inject: argument list must be nonempty");
  }
  require_equal_sizes(args, "pair_inject");
  Labeling acc = args[0];
  for (std::size_t a = 1; a < args.size(); ++a) {
    std::vector<std::uint64_t> next(acc.index_size());
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = cantor_pair(acc[i], args[a][i]);
    }
    acc = Labeling(std::move(next));
  }
  return acc;
}

FinAlgebra::FinAlgebra(std::size_t index_size, Partition finest_kernel)
    : index_size_(index_size), finest_kernel_(std::move(finest_kernel)) {
  if (finest_kernel_.ground_size() != index_size_) {
    throw SizeMismatchError("FinAlgebra: kernel ground size " +
                            std::to_string(finest_kernel_.ground_size()) +
                            " does not match index size " +
                            std::to_string(index_size_));
  }
}

FinAlgebra generate(std::size_t index_size, const std::vector<Labeling>& gens) {
  if (gens.empty()) {
    throw ValidationError("generate: generator list must be nonempty");
  }
  for (const Labeling& g : gens) {
    if (g.index_size() != index_size) {
      throw SizeMismatchError("generate: generator index size " +
                              std::to_string(g.index_size()) +
                              " does not match " + std::to_string(index_size));
    }
  }
  Partition finest = kernel(gens[0]);
  for (std::size_t i = 1; i < gens.size(); ++i) {
    finest = meet(finest, kernel(gens[i]));
  }
  return FinAlgebra(index_size, std::move(finest));
}

bool contains(const FinAlgebra& algebra, const Labeling& ell) {
  if (ell.index_size() != algebra.index_size()) {
    throw SizeMismatchError("contains: labeling index size " +
                            std::to_string(ell.index_size()) +
                            " does not match algebra index size " +
                            std::to_string(algebra.index_size()));
  }
  return refines(algebra.finest_kernel(), kernel(ell));
}

FinSpace spectrum(const FinAlgebra& algebra) {
  const std::size_t points = algebra.block_count();
  std::vector<Partition> gens;
  gens.push_back(Partition::discrete(points));
  return FinSpace(points, std::move(gens));
}

SpectrumPoint::SpectrumPoint(FinAlgebra algebra, std::size_t block)
    : algebra_(std::move(algebra)), block_(block) {
  if (block_ >= algebra_.block_count()) {
    throw ValidationError("SpectrumPoint: block " + std::to_string(block_) +
                          " out of range for " +
                          std::to_string(algebra_.block_count()) + " blocks");
  }
}

std::uint64_t evaluate(const FinAlgebra& algebra, std::size_t block,
                       const Labeling& ell) {
  if (!contains(algebra, ell)) {
    throw MembershipError("evaluate: labeling is not a member of the algebra");
  }
  if (block >= algebra.block_count()) {
    throw ValidationError("evaluate: block out of range");
  }
  const auto& ids = algebra.finest_kernel().block_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == block) return ell[i];
  }
  throw ValidationError("evaluate: empty block");  // unreachable: blocks are nonempty
}

std::uint64_t evaluate(const SpectrumPoint& phi, const Labeling& ell) {
  return evaluate(phi.algebra(), phi.block(), ell);
}

PartCongruence::PartCongruence(FinAlgebra algebra,
                               std::vector<std::size_t> support)
    : algebra_(std::move(algebra)), support_(std::move(support)) {
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] >= algebra_.block_count()) {
      throw ValidationError("PartCongruence: block " +
                            std::to_string(support_[i]) + " out of range");
    }
    if (i > 0 && support_[i] <= support_[i - 1]) {
      throw ValidationError("PartCongruence: support must be strictly increasing");
    }
  }
}

bool congruence_kernel_pairs(const PartCongruence& theta, const Labeling& ell,
                             const Labeling& em) {
  for (std::size_t b : theta.support()) {
    if (evaluate(theta.algebra(), b, ell) != evaluate(theta.algebra(), b, em)) {
      return false;
    }
  }
  return true;
}

Labeling member_from_block_values(const FinAlgebra& algebra,
                                  const std::vector<std::uint64_t>& block_values) {
  if (block_values.size() != algebra.block_count()) {
    throw SizeMismatchError("member_from_block_values: expected one value per block");
  }
  const auto& ids = algebra.finest_kernel().block_ids();
  std::vector<std::uint64_t> labels(algebra.index_size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    labels[i] = block_values[ids[i]];
  }
  return Labeling(std::move(labels));
}

std::vector<std::uint64_t> block_values_of(const FinAlgebra& algebra,
                                           const Labeling& member) {
  if (!contains(algebra, member)) {
    throw MembershipError("block_values_of: labeling is not a member");
  }
  const auto reps = algebra.finest_kernel().block_representatives();
  std::vector<std::uint64_t> values(reps.size());
  for (std::size_t b = 0; b < reps.size(); ++b) values[b] = member[reps[b]];
  return values;
}

std::vector<Labeling> members_over_alphabet(const FinAlgebra& algebra,
                                            std::uint64_t alphabet) {
  const std::size_t k = algebra.block_count();
  std::vector<Labeling> out;
  if (alphabet == 0) {
    if (k == 0) out.push_back(member_from_block_values(algebra, {}));
    return out;
  }
  std::vector<std::uint64_t> values(k, 0);
  while (true) {
    out.push_back(member_from_block_values(algebra, values));
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++values[pos] < alphabet) break;
      values[pos] = 0;
      if (pos == 0) return out;
    }
    if (k == 0) return out;
  }
}

}  // namespace clonedual
