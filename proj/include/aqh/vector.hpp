#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqh/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<aqh::Rational> : GenericNumTraits<aqh::Rational> {
  using Real = aqh::Rational;
  using NonInteger = aqh::Rational;
  using Nested = aqh::Rational;
  using Literal = aqh::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };

  static inline Real epsilon() { return aqh::Rational(0); }
  static inline Real dummy_precision() { return aqh::Rational(0); }
  static inline Real highest() { return aqh::Rational(std::numeric_limits<std::int64_t>::max()); }
  static inline Real lowest() { return aqh::Rational(std::numeric_limits<std::int64_t>::min() + 1); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace aqh {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact vector in the ambient Euclidean space; carries roots, weights and beta.
using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroVector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Vector make_vector(std::initializer_list<Rational> coords);
/// Standard basis vector e_{index} (0-based) in dimension `dim`.
Vector unit_vector(Eigen::Index dim, Eigen::Index index);

template <typename DerivedA, typename DerivedB>
void require_same_size(const Eigen::MatrixBase<DerivedA>& u, const Eigen::MatrixBase<DerivedB>& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("ambient dimensions differ: " + std::to_string(u.size()) + " vs " +
                            std::to_string(v.size()));
  }
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != Scalar(0)) return false;
  }
  return true;
}

/// Euclidean inner product.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar inner(const Eigen::MatrixBase<DerivedA>& u,
                                const Eigen::MatrixBase<DerivedB>& v) {
  require_same_size(u, v);
  typename DerivedA::Scalar acc(0);
  for (Eigen::Index i = 0; i < u.size(); ++i) acc += u(i) * v(i);
  return acc;
}

/// Inner product with a diagonal Gram matrix given by `weights`.
template <typename DerivedA, typename DerivedB, typename DerivedW>
typename DerivedA::Scalar inner(const Eigen::MatrixBase<DerivedA>& u,
                                const Eigen::MatrixBase<DerivedB>& v,
                                const Eigen::MatrixBase<DerivedW>& weights) {
  require_same_size(u, v);
  require_same_size(u, weights);
  typename DerivedA::Scalar acc(0);
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u(i) != 0 && v(i) != 0) acc += weights(i) * u(i) * v(i);
  }
  return acc;
}

template <typename Derived>
typename Derived::Scalar norm2(const Eigen::MatrixBase<Derived>& v) {
  return inner(v, v);
}

/// 2<alpha,beta>/<alpha,alpha>, not assumed integral.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cartan_int(const Eigen::MatrixBase<DerivedA>& alpha,
                                     const Eigen::MatrixBase<DerivedB>& beta) {
  auto a2 = inner(alpha, alpha);
  if (a2 == 0) throw ZeroVector("cartan_int: alpha is zero");
  return typename DerivedA::Scalar(2) * inner(alpha, beta) / a2;
}

/// The reflection s_alpha(v) = v - (2<alpha,v>/<alpha,alpha>) alpha.
template <typename DerivedV, typename DerivedA>
VectorX<typename DerivedV::Scalar> reflect(const Eigen::MatrixBase<DerivedV>& v,
                                           const Eigen::MatrixBase<DerivedA>& alpha) {
  auto a2 = inner(alpha, alpha);
  if (a2 == 0) throw ZeroVector("reflect: alpha is zero");
  auto c = typename DerivedV::Scalar(2) * inner(alpha, v) / a2;
  VectorX<typename DerivedV::Scalar> out = v;
  if (c != 0) {
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      if (alpha(i) != 0) out(i) -= c * alpha(i);
    }
  }
  return out;
}

/// Exact rank of the span of `vectors` (row reduction over the rationals).
int rank(const std::vector<Vector>& vectors);

/// Coefficients expressing `v` in terms of `basis` (assumed independent), if `v` lies in their span.
std::optional<Vector> solve_in_span(const std::vector<Vector>& basis, const Vector& v);

/// Lexicographic order on coordinate tuples; the canonical order for every set output.
struct LexLess {
  template <typename DerivedA, typename DerivedB>
  bool operator()(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) const {
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return a.size() < b.size();
  }
};

template <typename DerivedA, typename DerivedB>
bool equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

/// First nonzero coordinate positive.
template <typename Derived>
bool lex_positive(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return v(i) > 0;
  }
  return false;
}

/// Sorted, duplicate-free collection of vectors with logarithmic lookup.
class VectorSet {
 public:
  using const_iterator = std::vector<Vector>::const_iterator;

  VectorSet() = default;
  explicit VectorSet(std::vector<Vector> vectors);

  [[nodiscard]] bool contains(const Vector& v) const;
  /// Position in sorted order, or -1.
  [[nodiscard]] std::ptrdiff_t index_of(const Vector& v) const;

  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] const Vector& operator[](std::size_t i) const { return items_[i]; }
  [[nodiscard]] const std::vector<Vector>& items() const noexcept { return items_; }
  [[nodiscard]] const_iterator begin() const noexcept { return items_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return items_.end(); }

  friend bool operator==(const VectorSet& a, const VectorSet& b);

 private:
  std::vector<Vector> items_;
};

void sort_unique(std::vector<Vector>& vectors);

std::string to_string(const Vector& v);

}  // namespace aqh
