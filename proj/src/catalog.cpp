#include "aqh/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

namespace aqh {

namespace {

char series_char(Series s) { return static_cast<char>('A' + static_cast<int>(s)); }

Vector zeros(Eigen::Index dim) { return Vector::Constant(dim, Rational(0)); }

// +-e_i +- e_j for i < j.
void add_long_pairs(std::vector<Vector>& roots, int n, bool plus, bool minus) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          if (si == sj && !plus) continue;
          if (si != sj && !minus) continue;
          Vector v = zeros(n);
          v(i) = si;
          v(j) = sj;
          roots.push_back(std::move(v));
        }
      }
    }
  }
}

std::vector<Vector> e8_roots() {
  std::vector<Vector> roots;
  add_long_pairs(roots, 8, true, true);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    Vector v(8);
    for (int i = 0; i < 8; ++i) v(i) = Rational((mask >> i) & 1 ? -1 : 1, 2);
    roots.push_back(std::move(v));
  }
  return roots;
}

std::vector<Vector> orthogonal_to(const std::vector<Vector>& roots, const std::vector<Vector>& normals) {
  std::vector<Vector> out;
  for (const auto& r : roots) {
    if (std::all_of(normals.begin(), normals.end(), [&r](const Vector& n) { return inner(r, n) == 0; })) {
      out.push_back(r);
    }
  }
  return out;
}

std::vector<Vector> catalog_roots(const CartanLabel& label) {
  const int n = label.rank;
  std::vector<Vector> roots;
  switch (label.series) {
    case Series::A:
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          if (i == j) continue;
          Vector v = zeros(n + 1);
          v(i) = 1;
          v(j) = -1;
          roots.push_back(std::move(v));
        }
      }
      break;
    case Series::B:
    case Series::C:
    case Series::D:
      add_long_pairs(roots, n, true, true);
      if (label.series != Series::D) {
        const Rational scale = label.series == Series::B ? 1 : 2;
        for (int i = 0; i < n; ++i) {
          roots.push_back(scale * unit_vector(n, i));
          roots.push_back(-scale * unit_vector(n, i));
        }
      }
      break;
    case Series::E: {
      auto all = e8_roots();
      Vector e7e8 = zeros(8);
      e7e8(6) = 1;
      e7e8(7) = 1;
      Vector e6e8 = zeros(8);
      e6e8(5) = 1;
      e6e8(7) = 1;
      if (n == 8) roots = std::move(all);
      if (n == 7) roots = orthogonal_to(all, {e7e8});
      if (n == 6) roots = orthogonal_to(all, {e7e8, e6e8});
      break;
    }
    case Series::F:
      add_long_pairs(roots, 4, true, true);
      for (int i = 0; i < 4; ++i) {
        roots.push_back(unit_vector(4, i));
        roots.push_back(-unit_vector(4, i));
      }
      for (int mask = 0; mask < 16; ++mask) {
        Vector v(4);
        for (int i = 0; i < 4; ++i) v(i) = Rational((mask >> i) & 1 ? -1 : 1, 2);
        roots.push_back(std::move(v));
      }
      break;
    case Series::G:
      // Sum-zero plane of R^3: short roots e_i - e_j, long roots 2e_i - e_j - e_k.
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          Vector v = zeros(3);
          v(i) = 1;
          v(j) = -1;
          roots.push_back(std::move(v));
        }
        Vector l = Vector::Constant(3, Rational(-1));
        l(i) = 2;
        roots.push_back(l);
        roots.push_back(-l);
      }
      break;
  }
  return roots;
}

}  // namespace

bool is_admissible(const CartanLabel& label) {
  const int n = label.rank;
  switch (label.series) {
    case Series::A: return n >= 1;
    case Series::B: return n >= 2;
    case Series::C: return n >= 3;
    case Series::D: return n >= 4;
    case Series::E: return n >= 6 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
  }
  return false;
}

std::string to_string(const CartanLabel& label) {
  return std::string(1, series_char(label.series)) + std::to_string(label.rank);
}

std::string to_string(const std::vector<CartanLabel>& labels) {
  if (labels.empty()) return "T";
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += "+";
    out += to_string(l);
  }
  return out;
}

CartanLabel parse_label(std::string_view text) {
  if (text.size() < 2 || text[0] < 'A' || text[0] > 'G') {
    throw LabelError("malformed Cartan label '" + std::string(text) + "'");
  }
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000) {
      throw LabelError("malformed Cartan label '" + std::string(text) + "'");
    }
    rank = rank * 10 + (c - '0');
  }
  CartanLabel label{static_cast<Series>(text[0] - 'A'), rank};
  if (!is_admissible(label)) throw LabelError("inadmissible Cartan label '" + std::string(text) + "'");
  return label;
}

std::vector<CartanLabel> parse_type(std::string_view text) {
  std::vector<CartanLabel> out;
  std::size_t start = 0;
  while (true) {
    auto plus = text.find('+', start);
    out.push_back(parse_label(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start)));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

RootSystem build(const CartanLabel& label) {
  if (!is_admissible(label)) throw LabelError("inadmissible Cartan label " + to_string(label));
  if (label.rank > kMaxCatalogRank) throw LabelError("catalog rank is capped at 8: " + to_string(label));
  return RootSystem::from_roots(catalog_roots(label));
}

RootSystem build(const std::vector<CartanLabel>& labels) {
  if (labels.empty()) throw LabelError("empty type");
  std::vector<RootSystem> parts;
  parts.reserve(labels.size());
  for (const auto& l : labels) parts.push_back(build(l));
  return direct_sum(parts);
}

RootSystem direct_sum(const std::vector<RootSystem>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  if (parts.size() == 1) return parts.front();
  Eigen::Index dim = 0;
  for (const auto& p : parts) dim += p.ambient_dim();
  std::vector<Vector> roots;
  Vector metric(dim);
  bool normalized = true;
  Eigen::Index offset = 0;
  for (const auto& p : parts) {
    for (const auto& r : p.roots()) {
      Vector v = zeros(dim);
      v.segment(offset, p.ambient_dim()) = r;
      roots.push_back(std::move(v));
    }
    metric.segment(offset, p.ambient_dim()) = p.metric();
    normalized = normalized && p.normalization() == Normalization::long_squared_2;
    offset += p.ambient_dim();
  }
  auto sum = RootSystem::from_roots(std::move(roots));
  return sum.with_metric(std::move(metric), normalized ? Normalization::long_squared_2 : Normalization::raw);
}

RootSystem normalize(const RootSystem& system) {
  Vector metric = system.metric();
  std::vector<bool> assigned(static_cast<std::size_t>(system.ambient_dim()), false);
  std::vector<Rational> scale_of(static_cast<std::size_t>(system.ambient_dim()), Rational(1));
  for (const auto& component : irreducible_components(system.roots())) {
    Rational longest = 0;
    Rational shortest = system.norm2(component.front());
    for (const auto& r : component) {
      const Rational n2 = system.norm2(r);
      longest = std::max(longest, n2);
      shortest = std::min(shortest, n2);
    }
    const Rational ratio = longest / shortest;
    if (ratio == 3) throw G2Component("normalize: component with length ratio 3 (G2)");
    if (ratio != 1 && ratio != 2) throw std::invalid_argument("normalize: unexpected length ratio " + ratio.str());
    const Rational scale = Rational(2) / longest;
    for (Eigen::Index i = 0; i < system.ambient_dim(); ++i) {
      const bool used = std::any_of(component.begin(), component.end(), [i](const Vector& r) { return r(i) != 0; });
      if (!used) continue;
      auto idx = static_cast<std::size_t>(i);
      if (assigned[idx] && scale_of[idx] != scale) {
        throw std::invalid_argument("normalize: components with different scales share a coordinate");
      }
      assigned[idx] = true;
      scale_of[idx] = scale;
    }
  }
  for (Eigen::Index i = 0; i < system.ambient_dim(); ++i) metric(i) *= scale_of[static_cast<std::size_t>(i)];
  return system.with_metric(std::move(metric), Normalization::long_squared_2);
}

Vector highest_root(const RootSystem& system) {
  if (irreducible_components(system.roots()).size() != 1) {
    throw ReducibleInput("highest_root: system is reducible");
  }
  const auto simple = simple_roots(system.roots());
  std::vector<Vector> maximal;
  for (const auto& r : positive_roots(system.roots())) {
    bool top = std::none_of(simple.begin(), simple.end(),
                            [&](const Vector& s) { return system.contains(Vector(r + s)); });
    if (top) maximal.push_back(r);
  }
  if (maximal.size() != 1) throw ReducibleInput("highest_root: no unique maximal root");
  return maximal.front();
}

Permutation reflection_permutation(const RootSystem& system, const Vector& alpha) {
  const auto& roots = system.roots();
  Permutation perm(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto idx = roots.index_of(reflect(roots[i], alpha));
    if (idx < 0) throw std::invalid_argument("reflection_permutation: reflection leaves the root set");
    perm[i] = static_cast<std::uint16_t>(idx);
  }
  return perm;
}

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

Vector WeylGroup::apply(std::size_t element, const Vector& v) const {
  Vector out = v;
  const auto& w = words_[element];
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out = reflect(out, generators_[static_cast<std::size_t>(*it)]);
  }
  return out;
}

WeylGroup weyl_group(const RootSystem& system, int max_rank) {
  if (system.rank() > max_rank) {
    throw RankCapExceeded("weyl_group: rank " + std::to_string(system.rank()) + " exceeds cap " +
                          std::to_string(max_rank));
  }
  WeylGroup group;
  group.generators_ = simple_roots(system.roots());
  std::vector<Permutation> gens;
  for (const auto& g : group.generators_) gens.push_back(reflection_permutation(system, g));

  Permutation identity(system.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<std::uint16_t>(i);
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  seen.emplace(identity, 0);
  group.elements_.push_back(identity);
  group.words_.emplace_back();
  for (std::size_t current = 0; current < group.elements_.size(); ++current) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Permutation next(identity.size());
      const Permutation& base = group.elements_[current];
      for (std::size_t i = 0; i < next.size(); ++i) next[i] = gens[g][base[i]];
      if (seen.contains(next)) continue;
      seen.emplace(next, group.elements_.size());
      std::vector<int> word{static_cast<int>(g)};
      const auto& tail = group.words_[current];
      word.insert(word.end(), tail.begin(), tail.end());
      group.elements_.push_back(std::move(next));
      group.words_.push_back(std::move(word));
    }
  }
  return group;
}

Eigen::MatrixXi cartan_matrix(const std::vector<Vector>& simple) {
  const auto r = static_cast<Eigen::Index>(simple.size());
  Eigen::MatrixXi c(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) {
      const Rational v = cartan_int(simple[static_cast<std::size_t>(i)], simple[static_cast<std::size_t>(j)]);
      if (!v.is_integer()) throw std::invalid_argument("cartan_matrix: non-integral entry");
      c(i, j) = static_cast<int>(v.num());
    }
  }
  return c;
}

namespace {

// Reads the type of a connected Dynkin diagram off its Cartan matrix.
CartanLabel classify_diagram(const Eigen::MatrixXi& c, const std::vector<Rational>& norms) {
  const int r = static_cast<int>(c.rows());
  if (r == 1) return {Series::A, 1};
  std::vector<int> degree(static_cast<std::size_t>(r), 0);
  int max_bond = 0;
  int du = -1;
  int dv = -1;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j || c(i, j) == 0) continue;
      ++degree[static_cast<std::size_t>(i)];
      const int bond = c(i, j) * c(j, i);
      if (bond > max_bond) {
        max_bond = bond;
        du = i;
        dv = j;
      }
    }
  }
  if (max_bond == 3) return {Series::G, 2};
  if (max_bond == 2) {
    if (r == 2) return {Series::B, 2};
    if (degree[static_cast<std::size_t>(du)] == 2 && degree[static_cast<std::size_t>(dv)] == 2) {
      return {Series::F, 4};
    }
    const int leaf = degree[static_cast<std::size_t>(du)] == 1 ? du : dv;
    const int inner_node = leaf == du ? dv : du;
    const bool short_leaf = norms[static_cast<std::size_t>(leaf)] < norms[static_cast<std::size_t>(inner_node)];
    return {short_leaf ? Series::B : Series::C, r};
  }
  int branch = -1;
  for (int i = 0; i < r; ++i) {
    if (degree[static_cast<std::size_t>(i)] == 3) branch = i;
  }
  if (branch < 0) return {Series::A, r};
  std::vector<int> arms;
  for (int start = 0; start < r; ++start) {
    if (start == branch || c(branch, start) == 0) continue;
    int length = 1;
    int prev = branch;
    int node = start;
    while (true) {
      int next = -1;
      for (int k = 0; k < r; ++k) {
        if (k != node && k != prev && c(node, k) != 0) next = k;
      }
      if (next < 0) break;
      prev = node;
      node = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return {Series::D, r};
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    return {Series::E, r};
  }
  throw std::invalid_argument("identify_type: unrecognized Dynkin diagram");
}

}  // namespace

std::vector<CartanLabel> identify_type(const VectorSet& roots) {
  std::vector<CartanLabel> out;
  for (const auto& component : irreducible_components(roots)) {
    const auto simple = simple_roots(VectorSet(component));
    std::vector<Rational> norms;
    for (const auto& s : simple) norms.push_back(norm2(s));
    out.push_back(classify_diagram(cartan_matrix(simple), norms));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CartanLabel> identify_type(const RootSystem& system) { return identify_type(system.roots()); }

std::vector<CartanLabel> catalog_labels(int max_rank, std::string_view series_filter) {
  std::vector<CartanLabel> out;
  for (int s = 0; s < 7; ++s) {
    const auto series = static_cast<Series>(s);
    if (!series_filter.empty() && series_filter.find(series_char(series)) == std::string_view::npos) continue;
    for (int r = 1; r <= std::min(max_rank, kMaxCatalogRank); ++r) {
      CartanLabel label{series, r};
      if (is_admissible(label)) out.push_back(label);
    }
  }
  return out;
}

}  // namespace aqh
