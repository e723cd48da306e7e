#include "clonedual/partition.hpp"

#include <numeric>
#include <string>

#include "clonedual/errors.hpp"

namespace clonedual {

namespace {

// Plain union-find with path compression; lives only for the duration of a
// join computation.
struct DisjointSet {
  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }

  std::vector<std::size_t> parent;
};

void require_same_ground(const Partition& p, const Partition& q, const char* op) {
  if (p.ground_size() != q.ground_size()) {
    throw SizeMismatchError(std::string(op) + ": ground sizes differ (" +
                            std::to_string(p.ground_size()) + " vs " +
                            std::to_string(q.ground_size()) + ")");
  }
}

}  // namespace

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return from_block_ids(ids);
}

Partition Partition::coarsest(std::size_t n) {
  return from_block_ids(std::vector<std::size_t>(n, 0));
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < block_id_.size(); ++i) {
    out[block_id_[i]].push_back(i);
  }
  return out;
}

std::vector<std::size_t> Partition::block_representatives() const {
  std::vector<std::size_t> rep(block_count_);
  std::vector<bool> seen(block_count_, false);
  for (std::size_t i = 0; i < block_id_.size(); ++i) {
    if (!seen[block_id_[i]]) {
      seen[block_id_[i]] = true;
      rep[block_id_[i]] = i;
    }
  }
  return rep;
}

Partition meet(const Partition& p, const Partition& q) {
  require_same_ground(p, q, "meet");
  // Pair the two block ids injectively, then recanonicalize.
  std::vector<std::size_t> paired(p.ground_size());
  const std::size_t stride = q.block_count() + 1;
  for (std::size_t i = 0; i < paired.size(); ++i) {
    paired[i] = p.block_of(i) * stride + q.block_of(i);
  }
  return Partition::from_block_ids(paired);
}

Partition join(const Partition& p, const Partition& q) {
  require_same_ground(p, q, "join");
  const std::size_t n = p.ground_size();
  DisjointSet ds(n);
  std::vector<std::size_t> anchor_p(p.block_count(), n);
  std::vector<std::size_t> anchor_q(q.block_count(), n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t& ap = anchor_p[p.block_of(i)];
    if (ap == n) {
      ap = i;
    } else {
      ds.unite(ap, i);
    }
    std::size_t& aq = anchor_q[q.block_of(i)];
    if (aq == n) {
      aq = i;
    } else {
      ds.unite(aq, i);
    }
  }
  std::vector<std::size_t> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    roots[i] = ds.find(i);
  }
  return Partition::from_block_ids(roots);
}

bool refines(const Partition& p, const Partition& q) {
  require_same_ground(p, q, "refines");
  const std::size_t unset = q.block_count();
  std::vector<std::size_t> image(p.block_count(), unset);
  for (std::size_t i = 0; i < p.ground_size(); ++i) {
    std::size_t& target = image[p.block_of(i)];
    if (target == unset) {
      target = q.block_of(i);
    } else if (target != q.block_of(i)) {
      return false;
    }
  }
  return true;
}

std::size_t block_count(const Partition& p) { return p.block_count(); }

Partition pullback(const Partition& q, const std::vector<std::size_t>& values) {
  std::vector<std::size_t> ids(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ids[i] = q.block_of(values[i]);
  }
  return Partition::from_block_ids(ids);
}

Partition restrict_to(const Partition& p, const std::vector<std::size_t>& points) {
  std::vector<std::size_t> ids(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    ids[i] = p.block_of(points[i]);
  }
  return Partition::from_block_ids(ids);
}

std::string to_string(const Partition& p) {
  std::string out = "{";
  bool first_block = true;
  for (const auto& block : p.blocks()) {
    if (!first_block) out += ",";
    first_block = false;
    out += "{";
    bool first = true;
    for (std::size_t e : block) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(e);
    }
    out += "}";
  }
  out += "}";
  return out;
}

}  // namespace clonedual
