#pragma once

// Reference implementations used only by the tests. They are deliberately
// slow and share no search logic with the library.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "aqh/catalog.hpp"
#include "aqh/splitting.hpp"

namespace aqh::testing {

inline Vector vec(std::initializer_list<Rational> coords) { return make_vector(coords); }

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// |R| = dim g - rank g from the classical dimension table.
inline std::size_t expected_root_count(const CartanLabel& l) {
  const std::size_t n = l.rank;
  switch (l.series) {
    case Series::A: return n * (n + 1);
    case Series::B:
    case Series::C: return 2 * n * n;
    case Series::D: return 2 * n * (n - 1);
    case Series::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Series::F: return 48;
    case Series::G: return 12;
  }
  return 0;
}

inline std::int64_t expected_weyl_order(const CartanLabel& l) {
  const int n = l.rank;
  switch (l.series) {
    case Series::A: return factorial(n + 1);
    case Series::B:
    case Series::C: return (std::int64_t{1} << n) * factorial(n);
    case Series::D: return (std::int64_t{1} << (n - 1)) * factorial(n);
    case Series::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

inline RootSystem normalize_or_raw(std::string_view type) {
  auto system = build(parse_type(type));
  try {
    return normalize(system);
  } catch (const G2Component&) {
    return system;
  }
}

// The u(3) subsystem {+-(e_i - e_j)} of B3 in standard coordinates.
inline std::vector<Vector> u3_roots() {
  std::vector<Vector> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) out.push_back(unit_vector(3, i) - unit_vector(3, j));
    }
  }
  return out;
}

// Every splitting by exhausting the halves H of W with W = H u -H: the
// translation must be w -> 2c - w for the centroid c of H, and it must
// permute H without fixed points.
inline std::set<SplittingCertificate> naive_splittings(const IsotropyWeights& w) {
  std::vector<Vector> reps;
  for (const auto& x : w.weights) {
    if (lex_positive(x)) reps.push_back(x);
  }
  if (reps.size() * 2 != w.weights.size()) throw std::invalid_argument("weights not negation-closed");
  if (reps.size() > 20) throw std::invalid_argument("oracle limited to 40 weights");
  std::set<SplittingCertificate> out;
  const Eigen::Index dim = reps.empty() ? 0 : reps.front().size();
  for (std::uint32_t mask = 0; mask < (1U << reps.size()); ++mask) {
    std::vector<Vector> half;
    for (std::size_t i = 0; i < reps.size(); ++i) half.push_back((mask >> i) & 1U ? Vector(-reps[i]) : reps[i]);
    Vector centroid = Vector::Constant(dim, Rational(0));
    for (const auto& h : half) centroid += h;
    centroid /= Rational(static_cast<std::int64_t>(half.size()));
    if (is_zero(centroid)) continue;
    const VectorSet half_set(half);
    SplittingCertificate cert;
    cert.beta = centroid;
    bool ok = true;
    for (const auto& h : half) {
      Vector mirror = centroid * Rational(2) - h;
      if (equal(mirror, h) || !half_set.contains(mirror)) {
        ok = false;
        break;
      }
      if (LexLess{}(h, mirror)) cert.alphas.push_back(h - centroid);
    }
    if (!ok) continue;
    cert.n = static_cast<int>(cert.alphas.size());
    try {
      require_certificate_invariants(cert);
    } catch (const InvalidCertificate&) {
      continue;
    }
    out.insert(canonicalize(cert, w.metric));
  }
  return out;
}

}  // namespace aqh::testing
