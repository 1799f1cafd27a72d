#include "aqh/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace aqh {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::R1: return "R1";
    case Axiom::R2: return "R2";
    case Axiom::R3: return "R3";
    case Axiom::R4: return "R4";
  }
  return "?";
}

bool ValidationReport::violates(Axiom axiom) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [axiom](const Violation& v) { return v.axiom == axiom; });
}

namespace {

class ViolationLog {
 public:
  void add(Axiom axiom, std::string detail, const Vector& first, const Vector& second = Vector()) {
    auto [it, inserted] = seen_.try_emplace(axiom, log_.size());
    if (!inserted) {
      ++log_[it->second].count;
      return;
    }
    log_.push_back(Violation{axiom, std::move(detail), first, second, 1});
  }

  std::vector<Violation> take() {
    std::stable_sort(log_.begin(), log_.end(),
                     [](const Violation& a, const Violation& b) { return a.axiom < b.axiom; });
    return std::move(log_);
  }

 private:
  std::map<Axiom, std::size_t> seen_;
  std::vector<Violation> log_;
};

ValidationReport validate_impl(const std::vector<Vector>& candidate, bool check_reflections) {
  ViolationLog log;
  ValidationReport report;
  if (candidate.empty()) {
    log.add(Axiom::R1, "empty set", Vector());
    report.violations = log.take();
    return report;
  }

  const Eigen::Index dim = candidate.front().size();
  std::vector<Vector> usable;
  usable.reserve(candidate.size());
  for (const auto& v : candidate) {
    if (v.size() != dim) {
      log.add(Axiom::R1, "mixed ambient dimensions", v);
    } else if (is_zero(v)) {
      log.add(Axiom::R1, "zero vector present", v);
    } else {
      usable.push_back(v);
    }
  }
  {
    std::vector<Vector> sorted = usable;
    std::sort(sorted.begin(), sorted.end(), LexLess{});
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (equal(sorted[i - 1], sorted[i])) log.add(Axiom::R1, "duplicate vector", sorted[i]);
    }
  }
  const VectorSet set(std::move(usable));
  report.rank = rank(set.items());

  std::vector<Rational> norms;
  norms.reserve(set.size());
  for (const auto& v : set) norms.push_back(norm2(v));

  for (std::size_t i = 0; i < set.size(); ++i) {
    const Vector& a = set[i];
    for (std::size_t j = 0; j < set.size(); ++j) {
      const Vector& b = set[j];
      const Rational ab = inner(a, b);
      const Rational cab = Rational(2) * ab / norms[i];
      if (i != j) {
        // Cauchy-Schwarz equality: parallel iff c(a,b) c(b,a) = 4.
        const Rational cba = Rational(2) * ab / norms[j];
        if (cab * cba == 4 && !(norms[i] == norms[j] && cab.sign() < 0)) {
          log.add(Axiom::R2, "proportional roots other than +-alpha", a, b);
        }
      }
      if (!cab.is_integer()) log.add(Axiom::R3, "non-integral Cartan number", a, b);
      if (check_reflections) {
        Vector image = b;
        if (cab != 0) image -= cab * a;
        if (!set.contains(image)) log.add(Axiom::R4, "reflection leaves the set", a, b);
      }
    }
  }
  report.violations = log.take();
  return report;
}

}  // namespace

ValidationReport validate_root_system(const std::vector<Vector>& candidate) {
  return validate_impl(candidate, true);
}

ValidationReport validate_without_reflections(const std::vector<Vector>& candidate) {
  return validate_impl(candidate, false);
}

namespace {

std::string describe(const ValidationReport& report) {
  std::string out = "not a root system:";
  for (const auto& v : report.violations) out += " " + to_string(v.axiom) + " (" + v.detail + ")";
  return out;
}

}  // namespace

InvalidRootSystem::InvalidRootSystem(ValidationReport report)
    : std::invalid_argument(describe(report)), report_(std::move(report)) {}

RootSystem::RootSystem(VectorSet roots, Eigen::Index ambient_dim, int rank)
    : roots_(std::move(roots)),
      ambient_dim_(ambient_dim),
      rank_(rank),
      metric_(Vector::Constant(ambient_dim, Rational(1))) {}

RootSystem RootSystem::from_roots(std::vector<Vector> roots) {
  auto report = validate_root_system(roots);
  if (!report.ok()) throw InvalidRootSystem(std::move(report));
  const Eigen::Index dim = roots.front().size();
  return RootSystem(VectorSet(std::move(roots)), dim, report.rank);
}

Rational RootSystem::inner(const Vector& u, const Vector& v) const { return aqh::inner(u, v, metric_); }

RootSystem RootSystem::with_metric(Vector metric, Normalization normalization) const {
  require_same_size(metric, metric_);
  RootSystem out = *this;
  out.metric_ = std::move(metric);
  out.normalization_ = normalization;
  return out;
}

bool operator==(const RootSystem& a, const RootSystem& b) {
  return a.roots_ == b.roots_ && equal(a.metric_, b.metric_) && a.normalization_ == b.normalization_;
}

PairClass classify_pair(const Vector& alpha, const Vector& beta) {
  if (is_zero(alpha) || is_zero(beta)) throw ZeroVector("classify_pair: zero vector");
  const Rational ab = inner(alpha, beta);
  if (ab == 0) return {};
  const Rational a2 = norm2(alpha);
  const Rational b2 = norm2(beta);
  const bool beta_longer = b2 >= a2;
  const Rational& shorter2 = beta_longer ? a2 : b2;
  const Rational ratio = beta_longer ? b2 / a2 : a2 / b2;
  const Rational cartan = Rational(2) * ab / shorter2;
  if (ab * ab == a2 * b2) {
    if (a2 == b2) throw std::invalid_argument("classify_pair: beta = +-alpha");
    throw NormscalViolation("normscal violated: proportional roots " + to_string(alpha) + ", " +
                            to_string(beta));
  }
  if (!ratio.is_integer() || !cartan.is_integer() || ratio.num() < 1 || ratio.num() > 3 ||
      abs(cartan) != ratio) {
    throw NormscalViolation("normscal violated for " + to_string(alpha) + ", " + to_string(beta) +
                            ": ratio^2 " + ratio.str() + ", cartan " + cartan.str());
  }
  PairClass out;
  out.kind = static_cast<PairClass::Kind>(ratio.num());
  out.cartan_value = static_cast<int>(cartan.num());
  return out;
}

std::vector<Vector> root_chain(const Vector& beta, const Vector& alpha, const RootSystem& system) {
  const Rational c = cartan_int(alpha, beta);
  if (c == 0) throw std::invalid_argument("root_chain: <alpha, beta> = 0");
  if (!c.is_integer()) throw ChainBroken("root_chain: non-integral Cartan number " + c.str());
  const std::int64_t steps = c.num() < 0 ? -c.num() : c.num();
  const Rational sgn = c.sign();
  std::vector<Vector> chain;
  chain.reserve(static_cast<std::size_t>(steps));
  for (std::int64_t k = 1; k <= steps; ++k) {
    Vector next = beta - (sgn * Rational(k)) * alpha;
    if (!system.contains(next)) {
      throw ChainBroken("root_chain: " + to_string(next) + " missing from the system");
    }
    chain.push_back(std::move(next));
  }
  return chain;
}

std::vector<Vector> reflection_closure(const std::vector<Vector>& seed, std::size_t cap) {
  std::vector<Vector> items = seed;
  sort_unique(items);
  for (const auto& v : items) {
    if (is_zero(v)) throw ZeroVector("reflection_closure: zero vector in seed");
  }
  if (items.size() > cap) throw ClosureCapExceeded("reflection_closure: seed exceeds cap");
  std::vector<Vector> sorted = items;  // lookup copy
  auto known = [&sorted](const Vector& v) {
    return std::binary_search(sorted.begin(), sorted.end(), v, LexLess{});
  };
  auto insert = [&](Vector v) {
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v, LexLess{}), v);
    items.push_back(std::move(v));
    if (items.size() > cap) {
      throw ClosureCapExceeded("reflection_closure: more than " + std::to_string(cap) + " vectors");
    }
  };
  // Every pair (i, j) with max(i, j) < done has been processed in both directions.
  std::size_t done = 0;
  while (done < items.size()) {
    const std::size_t current = done++;
    for (std::size_t other = 0; other <= current; ++other) {
      for (int dir = 0; dir < 2; ++dir) {
        const Vector& mirror = dir == 0 ? items[current] : items[other];
        const Vector& target = dir == 0 ? items[other] : items[current];
        Vector image = reflect(target, mirror);
        if (!known(image)) insert(std::move(image));
      }
    }
  }
  return sorted;
}

bool is_root_subsystem(const std::vector<Vector>& candidate) {
  if (!validate_without_reflections(candidate).ok()) return false;
  try {
    return validate_root_system(reflection_closure(candidate)).ok();
  } catch (const ClosureCapExceeded&) {
    return false;
  }
}

std::vector<std::vector<Vector>> irreducible_components(const VectorSet& roots) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (inner(roots[i], roots[j]) != 0) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<Vector>> groups;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    auto root = find(i);
    auto [it, inserted] = groups.try_emplace(root);
    if (inserted) order.push_back(root);
    it->second.push_back(roots[i]);
  }
  std::vector<std::vector<Vector>> out;
  out.reserve(order.size());
  for (auto key : order) out.push_back(std::move(groups[key]));
  return out;
}

std::vector<Vector> positive_roots(const VectorSet& roots) {
  std::vector<Vector> out;
  for (const auto& r : roots) {
    if (lex_positive(r)) out.push_back(r);
  }
  return out;
}

std::vector<Vector> simple_roots(const VectorSet& roots) {
  const auto positive = positive_roots(roots);
  const VectorSet positive_set(positive);
  std::vector<bool> decomposable(positive.size(), false);
  for (std::size_t i = 0; i < positive.size(); ++i) {
    for (std::size_t j = i + 1; j < positive.size(); ++j) {
      auto idx = positive_set.index_of(positive[i] + positive[j]);
      if (idx >= 0) {
        // positive_set and positive share the same sorted order
        decomposable[static_cast<std::size_t>(idx)] = true;
      }
    }
  }
  std::vector<Vector> out;
  for (std::size_t i = 0; i < positive.size(); ++i) {
    if (!decomposable[i]) out.push_back(positive[i]);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace aqh
