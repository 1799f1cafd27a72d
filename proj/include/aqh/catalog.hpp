#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aqh/root_system.hpp"

namespace aqh {

enum class Series { A, B, C, D, E, F, G };

/// Irreducible Cartan type. Only canonical labels are admissible:
/// A(n>=1), B(n>=2), C(n>=3), D(n>=4), E6-E8, F4, G2.
struct CartanLabel {
  Series series = Series::A;
  int rank = 1;

  friend auto operator<=>(const CartanLabel&, const CartanLabel&) = default;
};

class LabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ReducibleInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class G2Component : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RankCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_admissible(const CartanLabel& label);
std::string to_string(const CartanLabel& label);
/// "A1+A1+B2"; the empty list prints as "T" (torus only).
std::string to_string(const std::vector<CartanLabel>& labels);

/// Parses "B3". Aliases such as "C2" or "D3" are rejected.
CartanLabel parse_label(std::string_view text);
/// Parses "A1+A1+G2" into its summands, in the order given.
std::vector<CartanLabel> parse_type(std::string_view text);

inline constexpr int kMaxCatalogRank = 8;

RootSystem build(const CartanLabel& label);
/// Direct sum of the summands of a parsed type string.
RootSystem build(const std::vector<CartanLabel>& labels);

/// Block-orthogonal concatenation of coordinates.
RootSystem direct_sum(const std::vector<RootSystem>& parts);

/// Rescales the metric of each irreducible component so that its long roots
/// have squared length 2. Throws G2Component for a component with length
/// ratio 3.
RootSystem normalize(const RootSystem& system);

/// Maximal root with respect to the lexicographic base; throws ReducibleInput.
Vector highest_root(const RootSystem& system);

/// A permutation of the sorted root list of a system.
using Permutation = std::vector<std::uint16_t>;

/// Permutation of the root list induced by the reflection in `alpha`.
Permutation reflection_permutation(const RootSystem& system, const Vector& alpha);

/// The Weyl group as permutations of the sorted root list. Each element also
/// records a shortest word in the simple reflections so it can act on
/// arbitrary vectors.
class WeylGroup {
 public:
  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<Vector>& generators() const noexcept { return generators_; }
  [[nodiscard]] const Permutation& permutation(std::size_t element) const { return elements_[element]; }
  [[nodiscard]] const std::vector<int>& word(std::size_t element) const { return words_[element]; }
  [[nodiscard]] const std::vector<Permutation>& elements() const noexcept { return elements_; }

  /// Linear action of an element on any vector of the ambient space.
  [[nodiscard]] Vector apply(std::size_t element, const Vector& v) const;

 private:
  friend WeylGroup weyl_group(const RootSystem& system, int max_rank);

  std::vector<Vector> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<int>> words_;
};

inline constexpr int kWeylRankCap = 4;

/// Enumerates the full group; throws RankCapExceeded above `max_rank`.
WeylGroup weyl_group(const RootSystem& system, int max_rank = kWeylRankCap);

/// Cartan matrix c_ij = 2<a_i,a_j>/<a_i,a_i> of an ordered list of simple roots.
Eigen::MatrixXi cartan_matrix(const std::vector<Vector>& simple);

/// Sorted multiset of irreducible types, identified from the Dynkin diagram of
/// each component's base. Canonical names are used for low-rank coincidences
/// (B1 -> A1, C2 -> B2, D2 -> A1+A1, D3 -> A3).
std::vector<CartanLabel> identify_type(const RootSystem& system);
std::vector<CartanLabel> identify_type(const VectorSet& roots);

/// All admissible labels of rank 1..max_rank, optionally restricted to series letters.
std::vector<CartanLabel> catalog_labels(int max_rank, std::string_view series_filter = {});

}  // namespace aqh
