#include "clonedual/finspace.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "clonedual/errors.hpp"

namespace clonedual {

FinSpace::FinSpace(std::size_t point_count, std::vector<Partition> generators)
    : point_count_(point_count),
      generators_(std::move(generators)),
      finest_(Partition::discrete(0)) {
  if (generators_.empty()) {
    throw ValidationError("FinSpace: generator list must be nonempty");
  }
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g].ground_size() != point_count_) {
      throw SizeMismatchError("FinSpace: generator " + std::to_string(g) +
                              " has ground size " +
                              std::to_string(generators_[g].ground_size()) +
                              ", expected " + std::to_string(point_count_));
    }
  }
  finest_ = generators_[0];
  for (std::size_t g = 1; g < generators_.size(); ++g) {
    finest_ = meet(finest_, generators_[g]);
  }
}

UniformMap::UniformMap(FinSpace source, FinSpace target,
                       std::vector<std::size_t> values)
    : source_(std::move(source)),
      target_(std::move(target)),
      values_(std::move(values)) {
  if (values_.size() != source_.point_count()) {
    throw SizeMismatchError("UniformMap: value list has length " +
                            std::to_string(values_.size()) + ", expected " +
                            std::to_string(source_.point_count()));
  }
  for (std::size_t v : values_) {
    if (v >= target_.point_count()) {
      throw ValidationError("UniformMap: value " + std::to_string(v) +
                            " out of range for a " +
                            std::to_string(target_.point_count()) +
                            "-point target");
    }
  }
  const Partition& fine = source_.finest();
  for (std::size_t g = 0; g < target_.generators().size(); ++g) {
    if (!refines(fine, pullback(target_.generators()[g], values_))) {
      throw NotUniformError(
          "map is not uniformly continuous: target generator " +
              std::to_string(g) + " = " + to_string(target_.generators()[g]) +
              " pulls back to a partition not refined by the source's finest " +
              to_string(fine),
          g);
    }
  }
}

const Partition& finest_uniform_partition(const FinSpace& x) {
  return x.finest();
}

bool is_separated(const FinSpace& x) { return x.finest().is_discrete(); }

bool is_totally_bounded_below(const FinSpace& x, std::size_t bound) {
  if (bound < 1) {
    throw ValidationError("is_totally_bounded_below: bound must be >= 1");
  }
  return x.finest().block_count() < bound;
}

Quotient separated_quotient(const FinSpace& x) {
  const Partition& fine = x.finest();
  const auto reps = fine.block_representatives();
  std::vector<Partition> pushed;
  pushed.reserve(x.generators().size());
  for (const Partition& g : x.generators()) {
    // fine refines g, so a block's generator-block is read off any member.
    std::vector<std::size_t> ids(fine.block_count());
    for (std::size_t b = 0; b < reps.size(); ++b) {
      ids[b] = g.block_of(reps[b]);
    }
    pushed.push_back(Partition::from_block_ids(ids));
  }
  FinSpace quotient(fine.block_count(), std::move(pushed));
  UniformMap map(x, quotient, fine.block_ids());
  return Quotient{std::move(quotient), std::move(map)};
}

UniformMap check_uniform(const std::vector<std::size_t>& values,
                         const FinSpace& source, const FinSpace& target) {
  return UniformMap(source, target, values);
}

FinSpace product(const FinSpace& x, const FinSpace& y) {
  const std::size_t nx = x.point_count();
  const std::size_t ny = y.point_count();
  const std::size_t n = nx * ny;
  std::vector<Partition> gens;
  gens.reserve(x.generators().size() + y.generators().size());
  for (const Partition& p : x.generators()) {
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) {
        ids[i * ny + j] = p.block_of(i);
      }
    }
    gens.push_back(Partition::from_block_ids(ids));
  }
  for (const Partition& q : y.generators()) {
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) {
        ids[i * ny + j] = q.block_of(j);
      }
    }
    gens.push_back(Partition::from_block_ids(ids));
  }
  return FinSpace(n, std::move(gens));
}

FinSpace subspace(const FinSpace& x, const std::vector<std::size_t>& points) {
  if (points.empty()) {
    throw ValidationError("subspace: point subset must be nonempty");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= x.point_count()) {
      throw ValidationError("subspace: point " + std::to_string(points[i]) +
                            " out of range");
    }
    if (i > 0 && points[i] <= points[i - 1]) {
      throw ValidationError("subspace: points must be strictly increasing");
    }
  }
  std::vector<Partition> gens;
  gens.reserve(x.generators().size());
  for (const Partition& g : x.generators()) {
    gens.push_back(restrict_to(g, points));
  }
  return FinSpace(points.size(), std::move(gens));
}

UniformMap compose(const UniformMap& f, const UniformMap& g) {
  if (!(f.target() == g.source())) {
    throw ValidationError("compose: inner target and outer source differ");
  }
  std::vector<std::size_t> values(f.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = g(f(i));
  }
  return UniformMap(f.source(), g.target(), std::move(values));
}

UniformMap identity_map(const FinSpace& x) {
  std::vector<std::size_t> values(x.point_count());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = i;
  return UniformMap(x, x, std::move(values));
}

bool has_dense_image(const UniformMap& f) {
  for (const Partition& g : f.target().generators()) {
    std::vector<bool> met(g.block_count(), false);
    for (std::size_t v : f.values()) {
      met[g.block_of(v)] = true;
    }
    for (bool m : met) {
      if (!m) return false;
    }
  }
  return true;
}

bool same_uniformity(const FinSpace& x, const FinSpace& y) {
  return x.point_count() == y.point_count() && x.finest() == y.finest();
}

bool uniformly_homeomorphic(const FinSpace& x, const FinSpace& y) {
  if (x.point_count() != y.point_count()) return false;
  auto sizes = [](const FinSpace& s) {
    std::vector<std::size_t> out;
    out.reserve(s.finest().block_count());
    for (const auto& b : s.finest().blocks()) out.push_back(b.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  return sizes(x) == sizes(y);
}

}  // namespace clonedual
