#include "clonedual/galois_hyper.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "clonedual/errors.hpp"

namespace clonedual {

namespace {

constexpr std::size_t kHyperspacePointLimit = 16;

void require_sorted_points(const std::vector<std::size_t>& points,
                           std::size_t limit, const char* what) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= limit) {
      throw ValidationError(std::string(what) + ": point " +
                            std::to_string(points[i]) + " out of range");
    }
    if (i > 0 && points[i] <= points[i - 1]) {
      throw ValidationError(std::string(what) +
                            ": points must be strictly increasing");
    }
  }
}

// The all-zeros member and the indicator of one block: the canonical pair
// separating exactly that block.
std::pair<Labeling, Labeling> separating_pair(const FinAlgebra& algebra,
                                              std::size_t block) {
  std::vector<std::uint64_t> zeros(algebra.block_count(), 0);
  std::vector<std::uint64_t> indicator(algebra.block_count(), 0);
  indicator[block] = 1;
  return {member_from_block_values(algebra, zeros),
          member_from_block_values(algebra, indicator)};
}

}  // namespace

PairSet::PairSet(FinAlgebra algebra,
                 std::vector<std::pair<Labeling, Labeling>> pairs)
    : algebra_(std::move(algebra)), pairs_(std::move(pairs)) {
  for (const auto& [ell, em] : pairs_) {
    if (!contains(algebra_, ell) || !contains(algebra_, em)) {
      throw MembershipError("PairSet: pair component is not a member of the algebra");
    }
  }
}

ClosedSet::ClosedSet(FinSpace space, std::vector<std::size_t> points)
    : space_(std::move(space)), points_(std::move(points)) {
  require_sorted_points(points_, space_.point_count(), "ClosedSet");
}

ClosedSet galois_f(const PairSet& r) {
  const FinAlgebra& algebra = r.algebra();
  std::vector<std::size_t> points;
  for (std::size_t b = 0; b < algebra.block_count(); ++b) {
    bool all_agree = true;
    for (const auto& [ell, em] : r.pairs()) {
      if (evaluate(algebra, b, ell) != evaluate(algebra, b, em)) {
        all_agree = false;
        break;
      }
    }
    if (all_agree) points.push_back(b);
  }
  return ClosedSet(spectrum(algebra), std::move(points));
}

ClosedSet galois_f(const PartCongruence& theta) {
  const FinAlgebra& algebra = theta.algebra();
  std::vector<std::size_t> points;
  for (std::size_t b = 0; b < algebra.block_count(); ++b) {
    // b is excluded iff some congruent pair separates it; the canonical
    // candidate is the zero member against the indicator of b.
    const auto [zero, indicator] = separating_pair(algebra, b);
    const bool related = congruence_kernel_pairs(theta, zero, indicator);
    const bool separates =
        evaluate(algebra, b, zero) != evaluate(algebra, b, indicator);
    if (!(related && separates)) points.push_back(b);
  }
  return ClosedSet(spectrum(algebra), std::move(points));
}

PartCongruence galois_g(const ClosedSet& s, const FinAlgebra& algebra) {
  if (!(s.space() == spectrum(algebra))) {
    throw ValidationError("galois_g: closed set does not live on the spectrum of the algebra");
  }
  return PartCongruence(algebra, s.points());
}

PartCongruence closure_C(const PairSet& r) {
  return galois_g(galois_f(r), r.algebra());
}

ClosedSet closure_D(const ClosedSet& s, const FinAlgebra& algebra) {
  return galois_f(galois_g(s, algebra));
}

FinSpace hyperspace(const FinSpace& x) {
  const std::size_t n = x.point_count();
  if (n == 0) {
    throw ValidationError("hyperspace: space must be nonempty");
  }
  if (n > kHyperspacePointLimit) {
    throw ValidationError("hyperspace: spaces above " +
                          std::to_string(kHyperspacePointLimit) +
                          " points are not materialized");
  }
  const std::size_t subset_count = (std::size_t{1} << n) - 1;

  std::vector<Partition> gens = x.generators();
  if (std::find(gens.begin(), gens.end(), x.finest()) == gens.end()) {
    gens.push_back(x.finest());
  }

  std::vector<Partition> hyper_gens;
  hyper_gens.reserve(gens.size());
  for (const Partition& e : gens) {
    // Subsets are grouped by the set of e-blocks they meet.
    std::vector<std::uint64_t> signature(subset_count, 0);
    for (std::size_t mask = 1; mask <= subset_count; ++mask) {
      std::uint64_t met = 0;
      for (std::size_t p = 0; p < n; ++p) {
        if (mask & (std::size_t{1} << p)) {
          met |= std::uint64_t{1} << e.block_of(p);
        }
      }
      signature[mask - 1] = met;
    }
    hyper_gens.push_back(Partition::from_labels(signature));
  }
  return FinSpace(subset_count, std::move(hyper_gens));
}

bool is_supercomplete(const FinSpace& x) {
  if (!is_separated(x)) return false;
  if (x.point_count() == 0) return true;
  return is_separated(hyperspace(x));
}

bool hyper_entourage_related(const FinAlgebra& algebra,
                             const std::vector<std::size_t>& c,
                             const std::vector<std::size_t>& d,
                             const Labeling& ell) {
  const std::vector<std::uint64_t> values = block_values_of(algebra, ell);
  auto covered = [&](const std::vector<std::size_t>& lhs,
                     const std::vector<std::size_t>& rhs) {
    for (std::size_t phi : lhs) {
      bool hit = false;
      for (std::size_t theta : rhs) {
        if (values[phi] == values[theta]) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };
  return covered(c, d) && covered(d, c);
}

PartCongruence restrict_to_generated(const PartCongruence& theta,
                                     const Labeling& ell) {
  const FinAlgebra& algebra = theta.algebra();
  if (!contains(algebra, ell)) {
    throw MembershipError("restrict_to_generated: labeling is not a member");
  }
  const FinAlgebra sub(algebra.index_size(), kernel(ell));
  const auto reps = algebra.finest_kernel().block_representatives();
  std::set<std::size_t> w;
  for (std::size_t b : theta.support()) {
    w.insert(sub.finest_kernel().block_of(reps[b]));
  }
  return PartCongruence(sub, std::vector<std::size_t>(w.begin(), w.end()));
}

bool check_pc_h_homeo(const FinAlgebra& algebra) {
  const std::size_t k = algebra.block_count();
  const FinSpace z = spectrum(algebra);
  const std::size_t subset_count = std::size_t{1} << k;

  std::vector<std::vector<std::size_t>> subsets(subset_count);
  for (std::size_t mask = 0; mask < subset_count; ++mask) {
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (std::size_t{1} << b)) subsets[mask].push_back(b);
    }
  }

  // (i) f* and g* are mutually inverse on all subsets, the empty set
  // included: g* of the empty closed set is the total congruence, and f* of
  // the total congruence is empty whenever any block can be separated.
  for (std::size_t mask = 0; mask < subset_count; ++mask) {
    const ClosedSet s(z, subsets[mask]);
    const PartCongruence theta = galois_g(s, algebra);
    if (!(galois_f(theta) == s)) return false;
    const PartCongruence v(algebra, subsets[mask]);
    if (!(galois_g(galois_f(v), algebra) == v)) return false;
  }

  // The nonempty closed sets are exactly the hyperspace points, in the same
  // canonical order.
  if (k > 0 && k <= kHyperspacePointLimit) {
    if (hyperspace(z).point_count() != subset_count - 1) return false;
  }

  // (ii) the entourage chain: relatedness under the agreement entourage at
  // ell, equality of value sets at ell, and equality of the restrictions of
  // the corresponding congruences to the subalgebra generated by ell all
  // coincide, for every member over a 3-label alphabet.
  for (const Labeling& ell : members_over_alphabet(algebra, 3)) {
    const std::vector<std::uint64_t> values = block_values_of(algebra, ell);
    for (std::size_t cm = 0; cm < subset_count; ++cm) {
      const PartCongruence rest_c = restrict_to_generated(
          galois_g(ClosedSet(z, subsets[cm]), algebra), ell);
      for (std::size_t dm = 0; dm < subset_count; ++dm) {
        const bool related =
            hyper_entourage_related(algebra, subsets[cm], subsets[dm], ell);

        std::set<std::uint64_t> vc, vd;
        for (std::size_t b : subsets[cm]) vc.insert(values[b]);
        for (std::size_t b : subsets[dm]) vd.insert(values[b]);
        const bool same_values = vc == vd;

        const PartCongruence rest_d = restrict_to_generated(
            galois_g(ClosedSet(z, subsets[dm]), algebra), ell);
        const bool same_restriction = rest_c == rest_d;

        if (related != same_values || same_values != same_restriction) {
          return false;
        }
      }
    }
  }
  return true;
}

bool set_equality_by_functions(const std::vector<std::uint64_t>& a,
                               const std::vector<std::uint64_t>& b) {
  std::set<std::uint64_t> occurring(a.begin(), a.end());
  occurring.insert(b.begin(), b.end());
  std::uint64_t fresh = 0;
  while (occurring.contains(fresh)) ++fresh;

  std::vector<std::uint64_t> domain(occurring.begin(), occurring.end());
  domain.push_back(fresh);
  std::sort(domain.begin(), domain.end());
  if (domain.size() > 20) {
    throw ValidationError("set_equality_by_functions: too many distinct labels");
  }

  // Translate both multisets into domain positions once.
  auto translate = [&](const std::vector<std::uint64_t>& xs) {
    std::vector<std::size_t> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out[i] = static_cast<std::size_t>(
          std::lower_bound(domain.begin(), domain.end(), xs[i]) -
          domain.begin());
    }
    return out;
  };
  const std::vector<std::size_t> pa = translate(a);
  const std::vector<std::size_t> pb = translate(b);

  // The sufficient family: every map domain -> {0, 1}, plus the identity.
  const std::size_t d = domain.size();
  std::vector<std::vector<std::uint64_t>> family;
  family.reserve((std::size_t{1} << d) + 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<std::uint64_t> f(d);
    for (std::size_t i = 0; i < d; ++i) {
      f[i] = (mask >> i) & 1;
    }
    family.push_back(std::move(f));
  }
  family.push_back(domain);  // the identity on occurring labels

  auto agrees = [](const std::vector<std::size_t>& positions,
                   const std::vector<std::uint64_t>& f,
                   const std::vector<std::uint64_t>& g) {
    for (std::size_t p : positions) {
      if (f[p] != g[p]) return false;
    }
    return true;
  };

  for (const auto& f : family) {
    for (const auto& g : family) {
      if (agrees(pa, f, g) != agrees(pb, f, g)) return false;
    }
  }
  return true;
}

}  // namespace clonedual
