#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqh/subalgebra.hpp"

namespace aqh {

/// Witness of a quaternionic weight splitting W = {eps_i alpha_i + eps beta}.
///
/// `beta` is half of the translation v carrying the minus half of W onto the
/// plus half; `alphas` holds one representative of each pair {+-alpha_i}.
struct SplittingCertificate {
  Vector beta;
  std::vector<Vector> alphas;
  int n = 0;

  friend bool operator==(const SplittingCertificate& a, const SplittingCertificate& b);
  friend bool operator<(const SplittingCertificate& a, const SplittingCertificate& b);
};

class InvalidCertificate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyWeights : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotNormalized : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class G2Input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnclassifiableTriple : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// beta nonzero, alphas nonzero with alpha_i != +-alpha_j,
/// and the 4n generated vectors pairwise distinct. Throws InvalidCertificate.
void require_certificate_invariants(const SplittingCertificate& cert);

/// Fixes the representation: beta lexicographically positive (the pair
/// (beta, A) and (-beta, A) describe the same splitting), each alpha signed
/// so that <beta, alpha> >= 0 under `metric`, lexicographically positive when
/// orthogonal, and the alphas sorted.
SplittingCertificate canonicalize(SplittingCertificate cert, const Vector& metric);

/// The 4n vectors +-alpha_i +- beta.
std::vector<Vector> generated_weights(const SplittingCertificate& cert);

/// True iff the generated vectors equal W as a set.
bool verify_certificate(const IsotropyWeights& w, const SplittingCertificate& cert);

struct SplittingOptions {
  /// When set, certificates are reduced to one per orbit of this group.
  const WeylGroup* weyl_dedup = nullptr;
};

/// All splittings of W, canonicalized and sorted. Throws EmptyWeights for an
/// empty W and std::invalid_argument when |W| is not a multiple of 4 or W is
/// not negation-closed.
std::vector<SplittingCertificate> find_splittings(const IsotropyWeights& w,
                                                  const SplittingOptions& options = {});

/// g . cert for a Weyl group element, re-canonicalized.
SplittingCertificate transform(const WeylGroup& group, std::size_t element,
                               const SplittingCertificate& cert, const Vector& metric);

struct ConstraintReport {
  std::vector<Rational> beta_alpha;  // <beta, alpha_i> in certificate order
  Rational beta_norm2;
  bool pscal_ok = false;  // every <beta, alpha_i> in {0, 1/4}
  bool beta_ok = false;   // |beta|^2 in {1/4, 3/4, 5/4}

  [[nodiscard]] bool passed() const noexcept { return pscal_ok && beta_ok; }
};

/// Evaluates the admissible-value constraints on a parent normalized to
/// long roots of squared length 2. Throws NotNormalized or G2Input.
ConstraintReport check_constraints(const RootSystem& parent, const SplittingCertificate& cert);

enum class CaseKind { symmetric_no_triple, case_a, case_b, case_c, case_d1, case_d2, case_d3 };

std::string to_string(CaseKind kind);

/// A relation (s1 beta + t1 alpha_i) + (s2 beta + t2 alpha_j) = s3 beta + t3 alpha_k.
struct TripleWitness {
  std::array<int, 3> indices{};  // positions in cert.alphas
  std::array<int, 6> signs{};    // s1, t1, s2, t2, s3, t3
};

struct CaseTag {
  CaseKind kind = CaseKind::symmetric_no_triple;
  std::optional<TripleWitness> witness;
};

/// Resolves the first sum relation among the weights into one of the cases
/// a)-d) (d split into its three sub-cases). Every relation present is
/// checked; one that fits no case raises UnclassifiableTriple.
CaseTag case_analysis(const IsotropyWeights& w, const SplittingCertificate& cert);

/// beta = theta/2 and A = {alpha - theta/2 : 2<alpha,theta>/<theta,theta> = 1}.
SplittingCertificate wolf_certificate(const RootSystem& parent);

}  // namespace aqh
