#include "aqh/splitting.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace aqh {

bool operator==(const SplittingCertificate& a, const SplittingCertificate& b) {
  return a.n == b.n && equal(a.beta, b.beta) &&
         std::equal(a.alphas.begin(), a.alphas.end(), b.alphas.begin(), b.alphas.end(),
                    [](const Vector& x, const Vector& y) { return equal(x, y); });
}

bool operator<(const SplittingCertificate& a, const SplittingCertificate& b) {
  LexLess less;
  if (less(a.beta, b.beta)) return true;
  if (less(b.beta, a.beta)) return false;
  return std::lexicographical_compare(a.alphas.begin(), a.alphas.end(), b.alphas.begin(), b.alphas.end(),
                                      LexLess{});
}

std::vector<Vector> generated_weights(const SplittingCertificate& cert) {
  std::vector<Vector> out;
  out.reserve(4 * cert.alphas.size());
  for (const auto& a : cert.alphas) {
    out.push_back(a + cert.beta);
    out.push_back(a - cert.beta);
    out.push_back(-a + cert.beta);
    out.push_back(-a - cert.beta);
  }
  return out;
}

void require_certificate_invariants(const SplittingCertificate& cert) {
  if (is_zero(cert.beta)) throw InvalidCertificate("beta must be nonzero");
  if (cert.n != static_cast<int>(cert.alphas.size())) throw InvalidCertificate("n differs from the number of alphas");
  for (const auto& a : cert.alphas) {
    require_same_size(a, cert.beta);
    if (is_zero(a)) throw InvalidCertificate("alpha must be nonzero");
  }
  auto generated = generated_weights(cert);
  const std::size_t total = generated.size();
  sort_unique(generated);
  if (generated.size() != total) throw InvalidCertificate("generated weights are not pairwise distinct");
}

SplittingCertificate canonicalize(SplittingCertificate cert, const Vector& metric) {
  if (!lex_positive(cert.beta)) cert.beta = -cert.beta;
  for (auto& a : cert.alphas) {
    const Rational p = inner(cert.beta, a, metric);
    if (p < 0 || (p == 0 && !lex_positive(a))) a = -a;
  }
  std::sort(cert.alphas.begin(), cert.alphas.end(), LexLess{});
  cert.n = static_cast<int>(cert.alphas.size());
  return cert;
}

bool verify_certificate(const IsotropyWeights& w, const SplittingCertificate& cert) {
  require_certificate_invariants(cert);
  return VectorSet(generated_weights(cert)) == w.weights;
}

namespace {

// Union-find over antipodal weight pairs with the parity of each node
// relative to its root, plus an optional forced value per root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), forced_(n, -1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    int parity = 0;
    std::size_t root = x;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    // compress
    int acc = parity;
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      const int step = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= step;
      x = next;
    }
    return {root, parity};
  }

  // x_a xor x_b = rel
  bool unite(std::size_t a, std::size_t b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    const int link = pa ^ pb ^ rel;
    parent_[rb] = ra;
    parity_[rb] = link;
    if (forced_[rb] >= 0) {
      const int as_ra = forced_[rb] ^ link;
      if (forced_[ra] >= 0 && forced_[ra] != as_ra) return false;
      forced_[ra] = as_ra;
    }
    return true;
  }

  bool force(std::size_t a, int value) {
    auto [ra, pa] = find(a);
    const int root_value = value ^ pa;
    if (forced_[ra] >= 0) return forced_[ra] == root_value;
    forced_[ra] = root_value;
    return true;
  }

  int forced(std::size_t root) const { return forced_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<int> forced_;
};

// Solutions for one translation v = 2 beta.
void splittings_for_translation(const VectorSet& weights, const std::vector<std::size_t>& negation,
                                const Vector& v, const Vector& metric,
                                std::vector<SplittingCertificate>& out) {
  const std::size_t m = weights.size();
  const Vector beta = v * Rational(1, 2);
  ParityUnionFind uf(m);
  // Literal of weight i: x_{rep(i)} xor flip(i), true iff i lies in the plus half.
  auto rep = [&](std::size_t i) { return std::min(i, negation[i]); };
  auto flip = [&](std::size_t i) { return i == rep(i) ? 0 : 1; };

  std::vector<std::ptrdiff_t> partner(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector image = v - weights[i];
    const auto j = weights.index_of(image);
    if (j < 0 || static_cast<std::size_t>(j) == i) {
      if (!uf.force(rep(i), flip(i))) return;
      continue;
    }
    partner[i] = j;
    const auto ju = static_cast<std::size_t>(j);
    if (!uf.unite(rep(i), rep(ju), flip(i) ^ flip(ju))) return;
  }

  std::vector<std::size_t> free_roots;
  for (std::size_t i = 0; i < m; ++i) {
    if (rep(i) != i) continue;
    auto [root, parity] = uf.find(i);
    if (root == i && uf.forced(root) < 0) free_roots.push_back(root);
  }
  if (free_roots.size() > 24) throw std::runtime_error("find_splittings: too many free components");

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_roots.size()); ++mask) {
    std::map<std::size_t, int> root_value;
    for (std::size_t k = 0; k < free_roots.size(); ++k) root_value[free_roots[k]] = (mask >> k) & 1;
    SplittingCertificate cert;
    cert.beta = beta;
    for (std::size_t i = 0; i < m; ++i) {
      auto [root, parity] = uf.find(rep(i));
      const int root_val = uf.forced(root) >= 0 ? uf.forced(root) : root_value[root];
      const bool plus = ((root_val ^ parity) ^ flip(i)) != 0;
      if (!plus) continue;
      if (partner[i] < 0) throw std::logic_error("find_splittings: unpaired weight in the plus half");
      const auto j = static_cast<std::size_t>(partner[i]);
      if (i < j) cert.alphas.push_back(weights[i] - beta);
    }
    cert.n = static_cast<int>(cert.alphas.size());
    out.push_back(canonicalize(std::move(cert), metric));
  }
}

SplittingCertificate orbit_minimum(const WeylGroup& group, const SplittingCertificate& cert, const Vector& metric) {
  SplittingCertificate best = cert;
  for (std::size_t g = 1; g < group.order(); ++g) {
    auto image = transform(group, g, cert, metric);
    if (image < best) best = std::move(image);
  }
  return best;
}

}  // namespace

std::vector<SplittingCertificate> find_splittings(const IsotropyWeights& w, const SplittingOptions& options) {
  const auto& weights = w.weights;
  const std::size_t m = weights.size();
  if (m == 0) throw EmptyWeights("find_splittings: empty weight set (g = h)");
  if (m % 4 != 0) throw std::invalid_argument("find_splittings: |W| is not divisible by 4");
  std::vector<std::size_t> negation(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = weights.index_of(-weights[i]);
    if (j < 0) throw std::invalid_argument("find_splittings: W is not negation-closed");
    negation[i] = static_cast<std::size_t>(j);
  }

  std::vector<Vector> translations;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      Vector v = weights[i] - weights[j];
      if (lex_positive(v)) translations.push_back(std::move(v));
    }
  }
  sort_unique(translations);

  std::vector<SplittingCertificate> certs;
  for (const auto& v : translations) splittings_for_translation(weights, negation, v, w.metric, certs);

  if (options.weyl_dedup != nullptr) {
    for (auto& c : certs) c = orbit_minimum(*options.weyl_dedup, c, w.metric);
  }
  std::sort(certs.begin(), certs.end());
  certs.erase(std::unique(certs.begin(), certs.end()), certs.end());
  for (const auto& c : certs) {
    if (!verify_certificate(w, c)) throw std::logic_error("find_splittings produced an invalid certificate");
  }
  return certs;
}

SplittingCertificate transform(const WeylGroup& group, std::size_t element, const SplittingCertificate& cert,
                               const Vector& metric) {
  SplittingCertificate out;
  out.beta = group.apply(element, cert.beta);
  for (const auto& a : cert.alphas) out.alphas.push_back(group.apply(element, a));
  out.n = cert.n;
  return canonicalize(std::move(out), metric);
}

ConstraintReport check_constraints(const RootSystem& parent, const SplittingCertificate& cert) {
  for (const auto& label : identify_type(parent)) {
    if (label.series == Series::G) throw G2Input("check_constraints: G2 has no {1,2} normalization");
  }
  if (parent.normalization() != Normalization::long_squared_2) {
    throw NotNormalized("check_constraints: parent metric is not normalized");
  }
  ConstraintReport report;
  report.pscal_ok = true;
  for (const auto& a : cert.alphas) {
    const Rational p = parent.inner(cert.beta, a);
    report.beta_alpha.push_back(p);
    report.pscal_ok = report.pscal_ok && (p == 0 || p == Rational(1, 4));
  }
  report.beta_norm2 = parent.norm2(cert.beta);
  const Rational& b = report.beta_norm2;
  report.beta_ok = b == Rational(1, 4) || b == Rational(3, 4) || b == Rational(5, 4);
  return report;
}

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::symmetric_no_triple: return "symmetric_no_triple";
    case CaseKind::case_a: return "case_a";
    case CaseKind::case_b: return "case_b";
    case CaseKind::case_c: return "case_c";
    case CaseKind::case_d1: return "case_d1";
    case CaseKind::case_d2: return "case_d2";
    case CaseKind::case_d3: return "case_d3";
  }
  return "?";
}

namespace {

struct WeightLabel {
  int beta_sign;
  int alpha_sign;
  int index;
};

std::optional<CaseKind> resolve(const TripleWitness& t, const SplittingCertificate& cert, const Vector& metric) {
  const auto& s = t.signs;
  int c = s[0] + s[2] - s[4];
  std::map<int, int> coeff;  // c * beta = sum coeff[i] alpha_i
  coeff[t.indices[0]] -= s[1];
  coeff[t.indices[1]] -= s[3];
  coeff[t.indices[2]] += s[5];
  if (c < 0) {
    c = -c;
    for (auto& [i, k] : coeff) k = -k;
  }
  std::vector<std::pair<int, int>> terms;  // (index, coefficient)
  for (const auto& [i, k] : coeff) {
    if (k != 0) terms.emplace_back(i, k);
  }
  std::vector<int> mags;
  for (const auto& [i, k] : terms) mags.push_back(std::abs(k));
  std::sort(mags.begin(), mags.end());
  if (c == 1 && mags == std::vector<int>{1, 2}) return CaseKind::case_a;
  if (c == 3 && mags == std::vector<int>{1}) return CaseKind::case_b;
  if (c == 3 && mags == std::vector<int>{1, 1, 1}) return CaseKind::case_c;
  if (c != 1 || mags != std::vector<int>{1, 1, 1}) return std::nullopt;

  int orthogonal = 0;
  int plus = 0;
  bool nonorthogonal_positive = true;
  for (const auto& [i, k] : terms) {
    const Rational p = inner(cert.beta, cert.alphas[static_cast<std::size_t>(i)], metric);
    if (p == 0) {
      ++orthogonal;
    } else if (k < 0) {
      nonorthogonal_positive = false;
    }
    if (k > 0) ++plus;
  }
  if (orthogonal == 2 && nonorthogonal_positive) return CaseKind::case_d1;
  if (orthogonal == 0 && plus == 2) return CaseKind::case_d2;
  if (orthogonal == 0 && plus == 3) return CaseKind::case_d3;
  return std::nullopt;
}

}  // namespace

CaseTag case_analysis(const IsotropyWeights& w, const SplittingCertificate& cert) {
  if (!verify_certificate(w, cert)) throw InvalidCertificate("case_analysis: certificate does not verify");
  std::vector<WeightLabel> labels(w.weights.size());
  for (std::size_t i = 0; i < cert.alphas.size(); ++i) {
    const auto& a = cert.alphas[i];
    for (int sb : {1, -1}) {
      for (int sa : {1, -1}) {
        const Vector v = Rational(sb) * cert.beta + Rational(sa) * a;
        labels[static_cast<std::size_t>(w.weights.index_of(v))] = {sb, sa, static_cast<int>(i)};
      }
    }
  }

  CaseTag tag;
  const auto& set = w.weights;
  for (std::size_t x = 0; x < set.size(); ++x) {
    for (std::size_t y = x; y < set.size(); ++y) {
      const auto z = set.index_of(Vector(set[x] + set[y]));
      if (z < 0) continue;
      const auto& lx = labels[x];
      const auto& ly = labels[y];
      const auto& lz = labels[static_cast<std::size_t>(z)];
      TripleWitness t;
      t.indices = {lx.index, ly.index, lz.index};
      t.signs = {lx.beta_sign, lx.alpha_sign, ly.beta_sign, ly.alpha_sign, lz.beta_sign, lz.alpha_sign};
      const auto kind = resolve(t, cert, w.metric);
      if (!kind) {
        throw UnclassifiableTriple("case_analysis: relation " + to_string(set[x]) + " + " + to_string(set[y]) +
                                   " = " + to_string(set[static_cast<std::size_t>(z)]) + " fits no case");
      }
      if (!tag.witness) {
        tag.kind = *kind;
        tag.witness = t;
      }
    }
  }
  return tag;
}

SplittingCertificate wolf_certificate(const RootSystem& parent) {
  const Vector theta = highest_root(parent);
  SplittingCertificate cert;
  cert.beta = theta * Rational(1, 2);
  std::vector<Vector> alphas;
  for (const auto& r : parent.roots()) {
    if (cartan_int(theta, r) == 1) alphas.push_back(r - cert.beta);
  }
  cert.alphas = std::move(alphas);
  cert = canonicalize(std::move(cert), parent.metric());
  sort_unique(cert.alphas);
  cert.n = static_cast<int>(cert.alphas.size());
  return cert;
}

}  // namespace aqh
