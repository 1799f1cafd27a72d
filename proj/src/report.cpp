#include "aqh/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace aqh {

using ojson = nlohmann::ordered_json;

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::not_eligible: return "not_eligible";
    case Verdict::no_splitting: return "no_splitting";
    case Verdict::wolf_space: return "wolf_space";
    case Verdict::so7_u3: return "so7_u3";
    case Verdict::s2xs2_type: return "s2xs2_type";
    case Verdict::symmetric_candidate: return "symmetric_candidate";
  }
  return "?";
}

bool is_positive(Verdict verdict) {
  return verdict == Verdict::wolf_space || verdict == Verdict::so7_u3 || verdict == Verdict::s2xs2_type ||
         verdict == Verdict::symmetric_candidate;
}

std::vector<std::string> verdict_violations(const PairReport& r) {
  std::vector<std::string> out;
  const bool has_certs = !r.certificates.empty();
  auto require = [&out](bool ok, const char* rule) {
    if (!ok) out.emplace_back(rule);
  };
  switch (r.verdict) {
    case Verdict::not_eligible:
      require(!r.eligible, "not_eligible verdict on an eligible pair");
      break;
    case Verdict::no_splitting:
      require(!has_certs, "no_splitting verdict with certificates");
      break;
    case Verdict::wolf_space:
      require(r.is_wolf && has_certs, "wolf_space verdict requires a Wolf pair with certificates");
      break;
    case Verdict::so7_u3: {
      const bool d3 = std::any_of(r.certificates.begin(), r.certificates.end(),
                                  [](const CertificateReport& c) { return c.case_tag == "case_d3"; });
      require(!r.symmetric && has_certs && d3 && r.g_type == "B3",
              "so7_u3 verdict requires a non-symmetric B3 pair with a case_d3 certificate");
      break;
    }
    case Verdict::s2xs2_type:
      require(has_certs && r.g_type == "A1+A1" && r.h_roots == 0,
              "s2xs2_type verdict requires g = A1+A1, h = torus and certificates");
      break;
    case Verdict::symmetric_candidate: {
      // Product positives are reported here even when not symmetric.
      const bool reducible = r.g_type.find('+') != std::string::npos;
      require((r.symmetric || reducible) && !r.is_wolf && has_certs,
              "symmetric_candidate verdict requires a symmetric non-Wolf pair with certificates");
      break;
    }
  }
  if (r.is_wolf && r.eligible && !has_certs) out.emplace_back("Wolf pair without a splitting");
  return out;
}

// ---------------------------------------------------------------------------
// Inputs

RootSystem prepare_parent(const std::string& g_spec) {
  std::vector<CartanLabel> labels;
  try {
    labels = parse_type(g_spec);
  } catch (const LabelError& e) {
    throw ParseError(e.what());
  }
  auto system = build(labels);
  try {
    return normalize(system);
  } catch (const G2Component&) {
    return system;
  }
}

std::vector<Vector> parse_vectors_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed root list: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("root list must be a JSON array");
  std::vector<Vector> out;
  for (const auto& item : doc) {
    if (!item.is_array()) throw ParseError("each root must be a JSON array of coordinates");
    Vector v(static_cast<Eigen::Index>(item.size()));
    Eigen::Index i = 0;
    for (const auto& c : item) {
      if (c.is_number_integer()) {
        v(i++) = Rational(c.get<std::int64_t>());
      } else if (c.is_string()) {
        try {
          v(i++) = Rational::parse(c.get<std::string>());
        } catch (const std::exception& e) {
          throw ParseError(e.what());
        }
      } else {
        throw ParseError("coordinates must be integers or \"p/q\" strings");
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

ClosedSubsystem resolve_subsystem(const RootSystem& parent, const std::string& h_spec,
                                  const std::vector<ClosedSubsystem>& classes) {
  if (h_spec.empty()) throw ParseError("empty subsystem selector");
  if (h_spec == "torus" || h_spec == "T") return make_subsystem(parent, RootIndices{});
  if (h_spec == "wolf") return wolf_subsystem(parent);
  if (h_spec == "full") return make_subsystem(parent, parent.roots().items());
  if (h_spec.front() == '[') {
    auto roots = parse_vectors_json(h_spec);
    for (const auto& r : roots) {
      if (r.size() != parent.ambient_dim()) throw ParseError("root " + to_string(r) + " has the wrong dimension");
    }
    return make_subsystem(parent, roots);
  }
  std::string type_text = h_spec;
  std::size_t index = 0;
  if (auto hash = h_spec.find('#'); hash != std::string::npos) {
    type_text = h_spec.substr(0, hash);
    const std::string digits = h_spec.substr(hash + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw ParseError("malformed embedding index in '" + h_spec + "'");
    }
    index = std::stoul(digits);
  }
  std::string wanted = type_text;
  if (type_text != "T") {
    try {
      auto labels = parse_type(type_text);
      std::sort(labels.begin(), labels.end());
      wanted = to_string(labels);
    } catch (const LabelError& e) {
      throw ParseError(e.what());
    }
  }
  if (classes.empty()) throw ParseError("type selectors need Weyl classes (rank <= 4)");
  std::size_t seen = 0;
  for (const auto& c : classes) {
    if (to_string(c.type) != wanted) continue;
    if (seen++ == index) return c;
  }
  throw ParseError("no subsystem class '" + h_spec + "' in this root system");
}

std::string describe_subsystem(const RootSystem& parent, const ClosedSubsystem& h,
                               const std::vector<ClosedSubsystem>& classes) {
  const std::string type = to_string(h.type);
  if (!classes.empty() && parent.rank() <= kWeylRankCap) {
    const auto group = weyl_group(parent);
    const auto key = canonical_form(group, h.indices);
    std::size_t k = 0;
    for (const auto& c : classes) {
      if (to_string(c.type) != type) continue;
      if (c.indices == key) return type + "#" + std::to_string(k);
      ++k;
    }
  }
  std::string out = type + "@[";
  for (std::size_t i = 0; i < h.indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(h.indices[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Cache

namespace {

std::string normalization_key(const RootSystem& parent) {
  return parent.normalization() == Normalization::long_squared_2 ? "long2" : "raw";
}

}  // namespace

std::filesystem::path SubsystemCache::path_for(const std::string& g_label, const RootSystem& parent,
                                               bool dedup) const {
  return directory_ /
         ("subsystems-" + g_label + "-" + normalization_key(parent) + (dedup ? "-dedup" : "-all") + ".json");
}

std::vector<ClosedSubsystem> SubsystemCache::get(const std::string& g_label, const RootSystem& parent,
                                                 bool dedup) const {
  if (!enabled()) return enumerate_closed_subsystems(parent, dedup);
  const auto path = path_for(g_label, parent, dedup);
  if (std::ifstream in(path); in) {
    try {
      ojson doc = ojson::parse(in);
      if (doc.at("schema") == kCacheSchema && doc.at("g") == g_label &&
          doc.at("roots").get<std::size_t>() == parent.size()) {
        std::vector<ClosedSubsystem> out;
        for (const auto& idx : doc.at("classes")) out.push_back(make_subsystem(parent, idx.get<RootIndices>()));
        return out;
      }
    } catch (const std::exception&) {
      // stale or corrupt entry: recompute below
    }
  }
  auto classes = enumerate_closed_subsystems(parent, dedup);
  ojson doc;
  doc["schema"] = kCacheSchema;
  doc["g"] = g_label;
  doc["normalization"] = normalization_key(parent);
  doc["dedup"] = dedup;
  doc["roots"] = parent.size();
  doc["classes"] = ojson::array();
  for (const auto& c : classes) doc["classes"].push_back(c.indices);
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    out << doc.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return classes;
}

// ---------------------------------------------------------------------------
// Pipelines

PairReport analyze_pair(const std::string& g_label, const RootSystem& parent, const ClosedSubsystem& h,
                        std::string h_description) {
  PairReport r;
  r.g_label = g_label;
  const auto g_type = identify_type(parent);
  r.g_type = to_string(g_type);
  r.h_description = std::move(h_description);
  r.h_type = to_string(h.type);
  r.h_roots = static_cast<int>(h.roots.size());
  r.torus_corank = h.torus_corank;

  const auto w = isotropy_weights(parent, h);
  if (w.dim_m == 0) throw EmptyWeights("h = g: the homogeneous space is a point");
  r.dim_m = w.dim_m;
  r.quaternionic_n = w.quaternionic_n;
  r.eligible = w.eligible();
  r.symmetric = is_symmetric_pair(w);
  const bool irreducible = g_type.size() == 1;
  r.is_wolf = irreducible && is_wolf_pair(parent, h);
  const bool constraints_apply = irreducible && g_type.front().series != Series::G &&
                                 parent.normalization() == Normalization::long_squared_2;

  if (r.eligible) {
    for (auto& cert : find_splittings(w)) {
      CertificateReport c;
      try {
        c.case_tag = to_string(case_analysis(w, cert).kind);
      } catch (const UnclassifiableTriple& e) {
        c.case_tag = "unclassifiable";
        r.violations.emplace_back(e.what());
      }
      if (constraints_apply) {
        c.constraints = check_constraints(parent, cert);
        if (!c.constraints->pscal_ok) r.violations.emplace_back("certificate violates <beta,alpha_i> in {0,1/4}");
        if (!r.symmetric && !c.constraints->passed()) {
          r.violations.emplace_back("non-symmetric certificate violates the admissible-value constraints");
        }
      }
      c.certificate = std::move(cert);
      r.certificates.push_back(std::move(c));
    }
  }

  const bool d3 = std::any_of(r.certificates.begin(), r.certificates.end(),
                              [](const CertificateReport& c) { return c.case_tag == "case_d3"; });
  if (!r.eligible) {
    r.verdict = Verdict::not_eligible;
  } else if (r.certificates.empty()) {
    r.verdict = Verdict::no_splitting;
  } else if (r.is_wolf) {
    r.verdict = Verdict::wolf_space;
  } else if (!r.symmetric && d3 && r.g_type == "B3") {
    r.verdict = Verdict::so7_u3;
  } else if (r.g_type == "A1+A1" && r.h_roots == 0) {
    r.verdict = Verdict::s2xs2_type;
  } else {
    r.verdict = Verdict::symmetric_candidate;
  }
  for (auto& v : verdict_violations(r)) r.violations.push_back(std::move(v));
  return r;
}

PairReport classify_pair(const std::string& g_spec, const std::string& h_spec, const SubsystemCache& cache) {
  const auto parent = prepare_parent(g_spec);
  std::vector<ClosedSubsystem> classes;
  if (parent.rank() <= kWeylRankCap) classes = cache.get(g_spec, parent, true);
  const auto h = resolve_subsystem(parent, h_spec, classes);
  return analyze_pair(g_spec, parent, h, describe_subsystem(parent, h, classes));
}

bool ClassificationReport::has_violations() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const PairReport& p) { return !p.violations.empty(); });
}

std::vector<std::string> classification_targets(const ClassifyOptions& options) {
  const auto simple = catalog_labels(options.max_rank, options.series);
  std::vector<std::string> out;
  for (const auto& l : simple) out.push_back(to_string(l));
  if (!options.include_products) return out;
  // Non-decreasing sequences of at least two simple labels with bounded total rank.
  std::vector<std::vector<CartanLabel>> products;
  std::function<void(std::vector<CartanLabel>&, std::size_t, int)> extend =
      [&](std::vector<CartanLabel>& prefix, std::size_t start, int rank_left) {
        if (prefix.size() >= 2) products.push_back(prefix);
        for (std::size_t i = start; i < simple.size(); ++i) {
          if (simple[i].rank > rank_left) continue;
          prefix.push_back(simple[i]);
          extend(prefix, i, rank_left - simple[i].rank);
          prefix.pop_back();
        }
      };
  std::vector<CartanLabel> prefix;
  extend(prefix, 0, options.max_rank);
  for (const auto& p : products) out.push_back(to_string(p));
  return out;
}

ClassificationReport classify_all(const ClassifyOptions& options, const SubsystemCache& cache) {
  if (options.max_rank > kWeylRankCap) {
    throw RankCapExceeded("classify_all: max rank " + std::to_string(options.max_rank) + " exceeds " +
                          std::to_string(kWeylRankCap));
  }
  if (options.max_rank < 1) throw std::invalid_argument("classify_all: max rank must be positive");
  const auto start = std::chrono::steady_clock::now();
  ClassificationReport report;
  report.options = options;

  struct Target {
    std::string label;
    RootSystem parent;
    std::vector<ClosedSubsystem> classes;
  };
  std::vector<Target> targets;
  for (const auto& label : classification_targets(options)) {
    auto parent = prepare_parent(label);
    auto classes = cache.get(label, parent, options.dedup);
    report.subsystems += static_cast<int>(classes.size());
    targets.push_back(Target{label, std::move(parent), std::move(classes)});
  }
  report.systems = static_cast<int>(targets.size());

  struct Task {
    std::size_t target;
    std::size_t subsystem;
  };
  std::vector<Task> tasks;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (std::size_t s = 0; s < targets[t].classes.size(); ++s) {
      if (targets[t].classes[s].roots.size() == targets[t].parent.size()) continue;  // h = g
      tasks.push_back({t, s});
    }
  }
  report.pairs_examined = static_cast<int>(tasks.size());

  std::vector<std::optional<PairReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        const auto& target = targets[tasks[i].target];
        const auto& h = target.classes[tasks[i].subsystem];
        const auto weights_size = target.parent.size() - h.roots.size();
        if (!options.include_ineligible && weights_size % 4 != 0) continue;
        std::string description =
            options.dedup ? describe_subsystem(target.parent, h, target.classes)
                          : describe_subsystem(target.parent, h, {});
        results[i] = analyze_pair(target.label, target.parent, h, std::move(description));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  for (auto& r : results) {
    if (r) report.pairs.push_back(std::move(*r));
  }
  std::stable_sort(report.pairs.begin(), report.pairs.end(), [](const PairReport& a, const PairReport& b) {
    if (a.g_label != b.g_label) return a.g_label < b.g_label;
    return a.h_description < b.h_description;
  });
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Output

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  throw ParseError("unknown format '" + std::string(text) + "'");
}

std::string rational_json(const Rational& x) { return x.str(); }

namespace {

ojson vector_json(const Vector& v) {
  ojson out = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

ojson certificate_object(const SplittingCertificate& cert, const std::string& case_tag) {
  ojson c;
  c["beta"] = vector_json(cert.beta);
  c["alphas"] = ojson::array();
  for (const auto& a : cert.alphas) c["alphas"].push_back(vector_json(a));
  c["n"] = cert.n;
  c["case"] = case_tag;
  return c;
}

ojson pair_object(const PairReport& r) {
  ojson p;
  p["g"] = r.g_label;
  p["g_type"] = r.g_type;
  p["h"] = r.h_description;
  p["h_type"] = r.h_type;
  p["h_roots"] = r.h_roots;
  p["torus_corank"] = r.torus_corank;
  p["dim_m"] = r.dim_m;
  p["quaternionic_n"] = r.quaternionic_n.str();
  p["eligible"] = r.eligible;
  p["symmetric"] = r.symmetric;
  p["is_wolf"] = r.is_wolf;
  p["verdict"] = to_string(r.verdict);
  p["certificates"] = ojson::array();
  p["constraints"] = ojson::array();
  for (const auto& c : r.certificates) {
    p["certificates"].push_back(certificate_object(c.certificate, c.case_tag));
    if (c.constraints) {
      ojson k;
      k["beta_alpha"] = ojson::array();
      for (const auto& x : c.constraints->beta_alpha) k["beta_alpha"].push_back(x.str());
      k["beta_norm2"] = c.constraints->beta_norm2.str();
      k["pscal_ok"] = c.constraints->pscal_ok;
      k["beta_ok"] = c.constraints->beta_ok;
      p["constraints"].push_back(std::move(k));
    } else {
      p["constraints"].push_back(nullptr);
    }
  }
  p["violations"] = r.violations;
  return p;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void table_header(std::ostream& out) {
  out << std::left << std::setw(12) << "g" << std::setw(22) << "h" << std::setw(6) << "dim" << std::setw(6)
      << "n" << std::setw(5) << "sym" << std::setw(6) << "wolf" << std::setw(7) << "certs"
      << "verdict\n";
}

void table_row(const PairReport& r, std::ostream& out) {
  out << std::left << std::setw(12) << r.g_label << std::setw(22) << r.h_description << std::setw(6) << r.dim_m
      << std::setw(6) << r.quaternionic_n.str() << std::setw(5) << yes_no(r.symmetric) << std::setw(6)
      << yes_no(r.is_wolf) << std::setw(7) << r.certificates.size() << to_string(r.verdict) << '\n';
}

void csv_header(std::ostream& out) {
  out << "g,h,h_type,dim_m,quaternionic_n,eligible,symmetric,is_wolf,certificates,verdict\n";
}

void csv_row(const PairReport& r, std::ostream& out) {
  out << r.g_label << ',' << r.h_description << ',' << r.h_type << ',' << r.dim_m << ','
      << r.quaternionic_n.str() << ',' << r.eligible << ',' << r.symmetric << ',' << r.is_wolf << ','
      << r.certificates.size() << ',' << to_string(r.verdict) << '\n';
}

}  // namespace

std::string certificate_json(const SplittingCertificate& cert, const std::string& case_tag) {
  return certificate_object(cert, case_tag).dump();
}

void emit(const PairReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      ojson doc;
      doc["schema"] = kReportSchema;
      doc.update(pair_object(report));
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::table:
      table_header(out);
      table_row(report, out);
      break;
    case Format::csv:
      csv_header(out);
      csv_row(report, out);
      break;
  }
}

void emit(const ClassificationReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      ojson doc;
      doc["schema"] = kReportSchema;
      doc["max_rank"] = report.options.max_rank;
      doc["series"] = report.options.series;
      doc["include_products"] = report.options.include_products;
      doc["include_ineligible"] = report.options.include_ineligible;
      doc["dedup"] = report.options.dedup;
      doc["statistics"] = {{"systems", report.systems},
                           {"subsystem_classes", report.subsystems},
                           {"pairs_examined", report.pairs_examined},
                           {"pairs_reported", report.pairs.size()}};
      if (report.options.timing) doc["elapsed_ms"] = report.elapsed_ms;
      doc["positives"] = ojson::array();
      for (const auto& p : report.pairs) {
        if (!is_positive(p.verdict)) continue;
        doc["positives"].push_back({{"g", p.g_label}, {"h", p.h_description}, {"verdict", to_string(p.verdict)}});
      }
      doc["pairs"] = ojson::array();
      for (const auto& p : report.pairs) doc["pairs"].push_back(pair_object(p));
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::table:
      table_header(out);
      for (const auto& p : report.pairs) table_row(p, out);
      if (report.options.timing) out << "elapsed_ms " << report.elapsed_ms << '\n';
      break;
    case Format::csv:
      csv_header(out);
      for (const auto& p : report.pairs) csv_row(p, out);
      break;
  }
}

int exit_code(const ClassificationReport& report) { return report.has_violations() ? 2 : 0; }

int exit_code(const PairReport& report) { return report.violations.empty() ? 0 : 2; }

}  // namespace aqh
