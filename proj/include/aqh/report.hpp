#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aqh/splitting.hpp"

namespace aqh {

inline constexpr std::string_view kReportSchema = "aqh-report/1";
inline constexpr std::string_view kCacheSchema = "aqh-subsystems/1";

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Verdict { not_eligible, no_splitting, wolf_space, so7_u3, s2xs2_type, symmetric_candidate };

std::string to_string(Verdict verdict);
bool is_positive(Verdict verdict);

struct CertificateReport {
  SplittingCertificate certificate;
  std::string case_tag;  // CaseKind name, or "unclassifiable"
  std::optional<ConstraintReport> constraints;
};

struct PairReport {
  std::string g_label;
  std::string g_type;  // identified Cartan type of g
  std::string h_description;
  std::string h_type;
  int h_roots = 0;
  int torus_corank = 0;
  int dim_m = 0;
  Rational quaternionic_n;
  bool eligible = false;
  bool symmetric = false;
  bool is_wolf = false;
  std::vector<CertificateReport> certificates;
  Verdict verdict = Verdict::not_eligible;
  /// Internal invariant violations detected while building this report.
  std::vector<std::string> violations;
};

/// Checks the verdict against the report fields; returns the broken rules.
std::vector<std::string> verdict_violations(const PairReport& report);

/// Enumerated Weyl classes of closed subsystems, optionally persisted as
/// JSON files keyed by (label, normalization, dedup).
class SubsystemCache {
 public:
  SubsystemCache() = default;
  explicit SubsystemCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

  std::vector<ClosedSubsystem> get(const std::string& g_label, const RootSystem& parent, bool dedup) const;
  [[nodiscard]] std::filesystem::path path_for(const std::string& g_label, const RootSystem& parent,
                                               bool dedup) const;
  [[nodiscard]] bool enabled() const noexcept { return !directory_.empty(); }

 private:
  std::filesystem::path directory_;
};

/// Builds g from a type string and normalizes it unless a component is G2.
RootSystem prepare_parent(const std::string& g_spec);

/// Subsystem selector grammar:
///   torus | T           the empty subsystem (h = maximal torus)
///   wolf                {+-theta} plus the roots orthogonal to theta
///   full                every root of g
///   TYPE[#k]            k-th Weyl class of closed subsystems of type TYPE
///                       (e.g. A2#0, A1+A1#1); k defaults to 0
///   [[..],[..],...]     explicit JSON list of roots, coordinates as
///                       integers or "p/q" strings
ClosedSubsystem resolve_subsystem(const RootSystem& parent, const std::string& h_spec,
                                  const std::vector<ClosedSubsystem>& classes);

/// Selector naming the Weyl class of h, e.g. "A2#0".
std::string describe_subsystem(const RootSystem& parent, const ClosedSubsystem& h,
                               const std::vector<ClosedSubsystem>& classes);

std::vector<Vector> parse_vectors_json(std::string_view text);

/// Full pipeline for one pair.
PairReport classify_pair(const std::string& g_spec, const std::string& h_spec,
                         const SubsystemCache& cache = {});

/// Pipeline on already-resolved inputs.
PairReport analyze_pair(const std::string& g_label, const RootSystem& parent, const ClosedSubsystem& h,
                        std::string h_description);

struct ClassifyOptions {
  int max_rank = 3;
  std::string series;  // letters to keep, empty = all
  bool include_products = false;
  bool include_ineligible = false;
  bool dedup = true;
  int jobs = 1;
  bool timing = false;
};

struct ClassificationReport {
  ClassifyOptions options;
  std::vector<PairReport> pairs;
  int systems = 0;
  int subsystems = 0;
  int pairs_examined = 0;
  double elapsed_ms = 0.0;  // only emitted when options.timing is set

  [[nodiscard]] bool has_violations() const;
};

ClassificationReport classify_all(const ClassifyOptions& options, const SubsystemCache& cache = {});

/// g labels visited by classify_all: simple types, then products when requested.
std::vector<std::string> classification_targets(const ClassifyOptions& options);

enum class Format { json, table, csv };

Format parse_format(std::string_view text);

std::string rational_json(const Rational& x);
std::string certificate_json(const SplittingCertificate& cert, const std::string& case_tag);

void emit(const PairReport& report, Format format, std::ostream& out);
void emit(const ClassificationReport& report, Format format, std::ostream& out);

/// 0 on success, 2 when any invariant violation was recorded.
int exit_code(const ClassificationReport& report);
int exit_code(const PairReport& report);

}  // namespace aqh
