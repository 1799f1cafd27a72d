#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aqh/catalog.hpp"

namespace aqh {

using RootIndices = std::vector<std::uint16_t>;

class NotClosed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root data of an equal-rank subalgebra h: a closed subsystem of the parent
/// plus a central torus of dimension `torus_corank`.
struct ClosedSubsystem {
  RootIndices indices;  // sorted positions in parent.roots()
  VectorSet roots;
  int torus_corank = 0;
  std::vector<CartanLabel> type;
};

/// Negation- and addition-closed within `parent`.
bool is_closed(const std::vector<Vector>& subset, const RootSystem& parent);

/// Throws NotClosed if `roots` is not a closed subset of parent roots.
ClosedSubsystem make_subsystem(const RootSystem& parent, const std::vector<Vector>& roots);
ClosedSubsystem make_subsystem(const RootSystem& parent, const RootIndices& indices);

/// Every closed subsystem of `parent`, including the empty one and the parent
/// itself. With `dedup`, one representative per Weyl-group class (the
/// lexicographically minimal image); requires rank <= 4. Output is sorted by
/// type string, then by root indices.
std::vector<ClosedSubsystem> enumerate_closed_subsystems(const RootSystem& parent, bool dedup = true);

/// Brute-force reference: filters every negation-closed subset. Only for
/// systems with at most ~16 positive roots.
std::vector<ClosedSubsystem> enumerate_closed_subsystems_brute_force(const RootSystem& parent);

/// Lexicographically minimal image of an index set under a Weyl group.
RootIndices canonical_form(const WeylGroup& group, const RootIndices& indices);

/// Orbit of an index set under the parent's Weyl group, via simple reflections.
std::vector<RootIndices> weyl_orbit(const RootSystem& parent, const RootIndices& indices);

/// W = R(g) \ R(h) with the metric of the parent.
struct IsotropyWeights {
  VectorSet weights;
  int dim_m = 0;
  Rational quaternionic_n;
  Vector metric;

  [[nodiscard]] bool eligible() const noexcept { return dim_m > 0 && dim_m % 4 == 0; }
};

IsotropyWeights isotropy_weights(const RootSystem& parent, const ClosedSubsystem& h);
/// Weight set given directly, e.g. a Weyl-transformed copy.
IsotropyWeights make_weights(std::vector<Vector> weights, Vector metric);

/// No two weights sum to a weight.
bool is_symmetric_pair(const IsotropyWeights& w);

/// {+-theta} together with the roots orthogonal to theta.
ClosedSubsystem wolf_subsystem(const RootSystem& parent);

/// Weyl-equivalent to wolf_subsystem(parent). Irreducible parents only.
bool is_wolf_pair(const RootSystem& parent, const ClosedSubsystem& h);

}  // namespace aqh
