#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqh/vector.hpp"

namespace aqh {

enum class Axiom { R1, R2, R3, R4 };

std::string to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::string detail;
  // Witness pair; `second` may be empty for single-vector witnesses.
  Vector first;
  Vector second;
  // Number of offending vectors or pairs found for this axiom.
  std::size_t count = 1;
};

/// Outcome of checking a candidate set against R1-R4. Violations are data.
struct ValidationReport {
  std::vector<Violation> violations;
  int rank = 0;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  [[nodiscard]] bool violates(Axiom axiom) const noexcept;
};

/// Checks R1-R4 on the hull of `candidate`. At most one witness is kept per axiom.
/// Zero vectors, duplicates and mixed dimensions are R1 violations.
ValidationReport validate_root_system(const std::vector<Vector>& candidate);

/// R1-R3 only, without the reflection condition.
ValidationReport validate_without_reflections(const std::vector<Vector>& candidate);

class InvalidRootSystem : public std::invalid_argument {
 public:
  explicit InvalidRootSystem(ValidationReport report);
  [[nodiscard]] const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

enum class Normalization { raw, long_squared_2 };

/// A validated finite root system with an optional per-coordinate metric.
///
/// The metric is a diagonal Gram matrix that is constant on the coordinate
/// block of each irreducible component, so reflections and Cartan integers
/// computed with the Euclidean product agree with the metric ones. Only
/// lengths and inner products depend on it.
class RootSystem {
 public:
  /// Validates and throws InvalidRootSystem on any violation.
  static RootSystem from_roots(std::vector<Vector> roots);

  [[nodiscard]] Eigen::Index ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] const VectorSet& roots() const noexcept { return roots_; }
  [[nodiscard]] std::size_t size() const noexcept { return roots_.size(); }
  [[nodiscard]] const Vector& metric() const noexcept { return metric_; }
  [[nodiscard]] Normalization normalization() const noexcept { return normalization_; }

  [[nodiscard]] bool contains(const Vector& v) const { return roots_.contains(v); }
  [[nodiscard]] Rational inner(const Vector& u, const Vector& v) const;
  [[nodiscard]] Rational norm2(const Vector& v) const { return inner(v, v); }

  /// Same roots with a different metric; no revalidation needed.
  [[nodiscard]] RootSystem with_metric(Vector metric, Normalization normalization) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b);

 private:
  RootSystem(VectorSet roots, Eigen::Index ambient_dim, int rank);

  VectorSet roots_;
  Eigen::Index ambient_dim_ = 0;
  int rank_ = 0;
  Vector metric_;
  Normalization normalization_ = Normalization::raw;
};

class NormscalViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChainBroken : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClosureCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative position of two non-proportional roots: orthogonal, or one of
/// the three length ratios with the Cartan integer of the shorter root
/// against the longer one.
struct PairClass {
  enum class Kind { orthogonal, ratio1, ratio2, ratio3 };
  Kind kind = Kind::orthogonal;
  int cartan_value = 0;

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

PairClass classify_pair(const Vector& alpha, const Vector& beta);

/// beta - sgn(c) k alpha for k = 1..|c|, c = cartan_int(alpha, beta); every
/// element is checked against `system`.
std::vector<Vector> root_chain(const Vector& beta, const Vector& alpha, const RootSystem& system);

inline constexpr std::size_t kClosureCap = 1000;

/// Smallest superset of `seed` closed under all its own reflections, sorted.
std::vector<Vector> reflection_closure(const std::vector<Vector>& seed,
                                       std::size_t cap = kClosureCap);

bool is_root_subsystem(const std::vector<Vector>& candidate);

/// Connected components of the non-orthogonality graph; each component is
/// sorted and components are ordered by their smallest root.
std::vector<std::vector<Vector>> irreducible_components(const VectorSet& roots);

/// Lexicographically positive roots.
std::vector<Vector> positive_roots(const VectorSet& roots);

/// Positive roots that are not a sum of two positive roots, sorted
/// lexicographically in decreasing order (e_1 - e_2 before e_2 - e_3).
std::vector<Vector> simple_roots(const VectorSet& roots);

}  // namespace aqh
