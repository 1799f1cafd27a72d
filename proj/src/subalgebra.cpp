#include "aqh/subalgebra.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace aqh {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RootIndices indices_of(const RootSystem& parent, const std::vector<Vector>& roots) {
  RootIndices out;
  out.reserve(roots.size());
  for (const auto& r : roots) {
    auto idx = parent.roots().index_of(r);
    if (idx < 0) throw NotClosed("vector " + to_string(r) + " is not a root of the parent");
    out.push_back(static_cast<std::uint16_t>(idx));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vector> roots_at(const RootSystem& parent, const RootIndices& indices) {
  std::vector<Vector> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(parent.roots()[i]);
  return out;
}

// Maximal closed subsystems of an irreducible system: one Levi factor per
// simple root, and one extended-diagram deletion per simple root whose mark
// in the highest root is prime.
std::vector<std::vector<Vector>> maximal_closed_subsystems(const std::vector<Vector>& component) {
  const VectorSet roots(component);
  const auto simple = simple_roots(roots);
  const auto system = RootSystem::from_roots(component);
  const Vector theta = highest_root(system);
  const auto marks = solve_in_span(simple, theta);
  if (!marks) throw std::logic_error("highest root outside the span of the base");

  std::vector<std::vector<Vector>> out;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    std::vector<Vector> rest;
    for (std::size_t j = 0; j < simple.size(); ++j) {
      if (j != i) rest.push_back(simple[j]);
    }
    out.push_back(rest.empty() ? std::vector<Vector>{} : reflection_closure(rest));
    const Rational mark = (*marks)(static_cast<Eigen::Index>(i));
    if (mark.is_integer() && is_prime(mark.num())) {
      rest.push_back(-theta);
      out.push_back(reflection_closure(rest));
    }
  }
  return out;
}

}  // namespace

bool is_closed(const std::vector<Vector>& subset, const RootSystem& parent) {
  const VectorSet set(subset);
  for (const auto& a : set) {
    if (!parent.contains(a) || !set.contains(Vector(-a))) return false;
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i; j < set.size(); ++j) {
      Vector sum = set[i] + set[j];
      if (parent.contains(sum) && !set.contains(sum)) return false;
    }
  }
  return true;
}

ClosedSubsystem make_subsystem(const RootSystem& parent, const RootIndices& indices) {
  for (auto i : indices) {
    if (i >= parent.size()) throw NotClosed("root index out of range");
  }
  auto roots = roots_at(parent, indices);
  if (!is_closed(roots, parent)) throw NotClosed("subset is not closed in the parent root system");
  ClosedSubsystem h;
  h.indices = indices;
  std::sort(h.indices.begin(), h.indices.end());
  h.indices.erase(std::unique(h.indices.begin(), h.indices.end()), h.indices.end());
  h.torus_corank = parent.rank() - rank(roots);
  h.roots = VectorSet(std::move(roots));
  h.type = identify_type(h.roots);
  return h;
}

ClosedSubsystem make_subsystem(const RootSystem& parent, const std::vector<Vector>& roots) {
  return make_subsystem(parent, indices_of(parent, roots));
}

RootIndices canonical_form(const WeylGroup& group, const RootIndices& indices) {
  RootIndices best = indices;
  std::sort(best.begin(), best.end());
  RootIndices image(indices.size());
  for (const auto& perm : group.elements()) {
    for (std::size_t k = 0; k < indices.size(); ++k) image[k] = perm[indices[k]];
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  return best;
}

std::vector<RootIndices> weyl_orbit(const RootSystem& parent, const RootIndices& indices) {
  std::vector<Permutation> gens;
  for (const auto& s : simple_roots(parent.roots())) gens.push_back(reflection_permutation(parent, s));
  RootIndices start = indices;
  std::sort(start.begin(), start.end());
  std::set<RootIndices> seen{start};
  std::vector<RootIndices> orbit{start};
  for (std::size_t cur = 0; cur < orbit.size(); ++cur) {
    for (const auto& g : gens) {
      RootIndices image(orbit[cur].size());
      for (std::size_t k = 0; k < image.size(); ++k) image[k] = g[orbit[cur][k]];
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) orbit.push_back(std::move(image));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

namespace {

std::vector<ClosedSubsystem> finish(const RootSystem& parent, const std::set<RootIndices>& found) {
  std::vector<ClosedSubsystem> out;
  out.reserve(found.size());
  for (const auto& idx : found) out.push_back(make_subsystem(parent, idx));
  std::stable_sort(out.begin(), out.end(), [](const ClosedSubsystem& a, const ClosedSubsystem& b) {
    const auto ta = to_string(a.type);
    const auto tb = to_string(b.type);
    if (ta != tb) return ta < tb;
    return a.indices < b.indices;
  });
  return out;
}

}  // namespace

std::vector<ClosedSubsystem> enumerate_closed_subsystems(const RootSystem& parent, bool dedup) {
  std::optional<WeylGroup> group;
  if (dedup) group = weyl_group(parent);
  auto key = [&](RootIndices s) {
    std::sort(s.begin(), s.end());
    return group ? canonical_form(*group, s) : s;
  };

  RootIndices all(parent.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint16_t>(i);
  std::set<RootIndices> seen{key(all)};
  std::vector<RootIndices> work{key(all)};
  for (std::size_t cur = 0; cur < work.size(); ++cur) {
    const RootIndices current = work[cur];
    const auto roots = roots_at(parent, current);
    if (roots.empty()) continue;
    for (const auto& component : irreducible_components(VectorSet(roots))) {
      const VectorSet component_set(component);
      std::vector<Vector> rest;
      for (const auto& r : roots) {
        if (!component_set.contains(r)) rest.push_back(r);
      }
      for (const auto& maximal : maximal_closed_subsystems(component)) {
        std::vector<Vector> next = rest;
        next.insert(next.end(), maximal.begin(), maximal.end());
        auto k = key(indices_of(parent, next));
        if (seen.insert(k).second) work.push_back(std::move(k));
      }
    }
  }

  if (dedup) return finish(parent, seen);
  std::set<RootIndices> everything;
  for (const auto& rep : seen) {
    for (auto& member : weyl_orbit(parent, rep)) everything.insert(std::move(member));
  }
  return finish(parent, everything);
}

std::vector<ClosedSubsystem> enumerate_closed_subsystems_brute_force(const RootSystem& parent) {
  const auto positive = positive_roots(parent.roots());
  if (positive.size() > 20) throw std::invalid_argument("brute force limited to 20 positive roots");
  std::set<RootIndices> found;
  for (std::uint32_t mask = 0; mask < (1U << positive.size()); ++mask) {
    std::vector<Vector> subset;
    for (std::size_t i = 0; i < positive.size(); ++i) {
      if (mask & (1U << i)) {
        subset.push_back(positive[i]);
        subset.push_back(-positive[i]);
      }
    }
    if (is_closed(subset, parent)) found.insert(indices_of(parent, subset));
  }
  return finish(parent, found);
}

IsotropyWeights make_weights(std::vector<Vector> weights, Vector metric) {
  IsotropyWeights w;
  w.weights = VectorSet(std::move(weights));
  w.dim_m = static_cast<int>(w.weights.size());
  w.quaternionic_n = Rational(w.dim_m, 4);
  w.metric = std::move(metric);
  return w;
}

IsotropyWeights isotropy_weights(const RootSystem& parent, const ClosedSubsystem& h) {
  std::vector<Vector> weights;
  for (const auto& r : parent.roots()) {
    if (!h.roots.contains(r)) weights.push_back(r);
  }
  return make_weights(std::move(weights), parent.metric());
}

bool is_symmetric_pair(const IsotropyWeights& w) {
  const auto& set = w.weights;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i; j < set.size(); ++j) {
      if (set.contains(Vector(set[i] + set[j]))) return false;
    }
  }
  return true;
}

ClosedSubsystem wolf_subsystem(const RootSystem& parent) {
  const Vector theta = highest_root(parent);
  std::vector<Vector> roots{theta, -theta};
  for (const auto& r : parent.roots()) {
    if (inner(r, theta) == 0) roots.push_back(r);
  }
  return make_subsystem(parent, roots);
}

bool is_wolf_pair(const RootSystem& parent, const ClosedSubsystem& h) {
  const auto wolf = wolf_subsystem(parent);
  if (wolf.indices.size() != h.indices.size() || wolf.type != h.type) return false;
  const auto orbit = weyl_orbit(parent, wolf.indices);
  return std::binary_search(orbit.begin(), orbit.end(), h.indices);
}

}  // namespace aqh
