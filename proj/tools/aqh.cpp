// Command-line front end: root systems, closed subsystems, isotropy weights,
// quaternionic splittings and the bounded-rank classification.

#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aqh/report.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace aqh;

constexpr int kUsageError = 1;

ojson vector_json(const Vector& v) {
  ojson out = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

ojson vectors_json(const std::vector<Vector>& vs) {
  ojson out = ojson::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

// Rows rendered as an aligned grid or as CSV; JSON output is built separately.
struct Rows {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(Format format, std::ostream& out) const {
    if (format == Format::csv) {
      auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
      return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(width[i] + 2)) << cells[i];
      }
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

void print_json(const ojson& doc) {
  ojson out;
  out["schema"] = kReportSchema;
  out.update(doc);
  std::cout << out.dump(2) << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Context {
  std::string format = "json";
  std::string cache_dir;
  bool no_dedup = false;

  [[nodiscard]] Format fmt() const { return parse_format(format); }
  [[nodiscard]] SubsystemCache cache() const { return SubsystemCache(cache_dir); }
};

std::vector<ClosedSubsystem> classes_for(const Context& ctx, const std::string& label, const RootSystem& g) {
  if (g.rank() > kWeylRankCap) return {};
  return ctx.cache().get(label, g, true);
}

int cmd_build(const Context& ctx, const std::string& label) {
  const auto g = prepare_parent(label);
  const bool irreducible = identify_type(g).size() == 1;
  const Vector theta = irreducible ? highest_root(g) : Vector();
  const auto simple = simple_roots(g.roots());
  if (ctx.fmt() == Format::json) {
    ojson doc;
    doc["g"] = label;
    doc["type"] = to_string(identify_type(g));
    doc["ambient_dim"] = g.ambient_dim();
    doc["rank"] = g.rank();
    doc["roots_count"] = g.size();
    doc["normalization"] = g.normalization() == Normalization::long_squared_2 ? "long_squared_2" : "raw";
    doc["metric"] = vector_json(g.metric());
    doc["simple_roots"] = vectors_json(simple);
    doc["highest_root"] = irreducible ? vector_json(theta) : ojson(nullptr);
    doc["roots"] = vectors_json(g.roots().items());
    print_json(doc);
    return 0;
  }
  Rows rows{{"root", "norm2", "simple", "highest"}, {}};
  const VectorSet simple_set(simple);
  for (const auto& r : g.roots()) {
    rows.rows.push_back(
        {to_string(r), g.norm2(r).str(), yes_no(simple_set.contains(r)), yes_no(irreducible && equal(r, theta))});
  }
  rows.print(ctx.fmt(), std::cout);
  return 0;
}

int cmd_validate(const Context& ctx, const std::string& label, const std::string& roots_json) {
  std::vector<Vector> candidate;
  std::string source = label;
  if (!roots_json.empty()) {
    candidate = parse_vectors_json(roots_json);
    source = "roots";
  } else if (!label.empty()) {
    candidate = build(parse_type(label)).roots().items();
  } else {
    throw ParseError("validate needs a type label or --roots");
  }
  const auto report = validate_root_system(candidate);
  if (ctx.fmt() == Format::json) {
    ojson doc;
    doc["input"] = source;
    doc["ok"] = report.ok();
    doc["rank"] = report.rank;
    doc["violations"] = ojson::array();
    for (const auto& v : report.violations) {
      doc["violations"].push_back({{"axiom", to_string(v.axiom)}, {"detail", v.detail}, {"count", v.count}});
    }
    print_json(doc);
  } else {
    Rows rows{{"axiom", "count", "detail"}, {}};
    for (const auto& v : report.violations) rows.rows.push_back({to_string(v.axiom), std::to_string(v.count), v.detail});
    if (ctx.fmt() == Format::table) std::cout << (report.ok() ? "valid root system\n" : "invalid root system\n");
    rows.print(ctx.fmt(), std::cout);
  }
  return 0;
}

int cmd_subsystems(const Context& ctx, const std::string& label) {
  const auto g = prepare_parent(label);
  const bool dedup = !ctx.no_dedup;
  const auto classes = ctx.cache().get(label, g, dedup);
  const std::vector<ClosedSubsystem> named = dedup ? classes : std::vector<ClosedSubsystem>{};
  if (ctx.fmt() == Format::json) {
    ojson doc;
    doc["g"] = label;
    doc["dedup"] = dedup;
    doc["count"] = classes.size();
    doc["subsystems"] = ojson::array();
    for (const auto& h : classes) {
      doc["subsystems"].push_back({{"selector", describe_subsystem(g, h, named)},
                                   {"type", to_string(h.type)},
                                   {"roots", h.roots.size()},
                                   {"torus_corank", h.torus_corank},
                                   {"dim_m", g.size() - h.roots.size()}});
    }
    print_json(doc);
    return 0;
  }
  Rows rows{{"selector", "type", "roots", "torus_corank", "dim_m"}, {}};
  for (const auto& h : classes) {
    rows.rows.push_back({describe_subsystem(g, h, named), to_string(h.type), std::to_string(h.roots.size()),
                         std::to_string(h.torus_corank), std::to_string(g.size() - h.roots.size())});
  }
  rows.print(ctx.fmt(), std::cout);
  return 0;
}

int cmd_weights(const Context& ctx, const std::string& label, const std::string& h_spec) {
  const auto g = prepare_parent(label);
  const auto classes = classes_for(ctx, label, g);
  const auto h = resolve_subsystem(g, h_spec, classes);
  const auto w = isotropy_weights(g, h);
  if (ctx.fmt() == Format::json) {
    ojson doc;
    doc["g"] = label;
    doc["h"] = describe_subsystem(g, h, classes);
    doc["h_type"] = to_string(h.type);
    doc["dim_m"] = w.dim_m;
    doc["quaternionic_n"] = w.quaternionic_n.str();
    doc["eligible"] = w.eligible();
    doc["symmetric"] = is_symmetric_pair(w);
    doc["weights"] = vectors_json(w.weights.items());
    print_json(doc);
    return 0;
  }
  Rows rows{{"weight", "norm2"}, {}};
  for (const auto& x : w.weights) rows.rows.push_back({to_string(x), inner(x, x, w.metric).str()});
  rows.print(ctx.fmt(), std::cout);
  return 0;
}

int cmd_split(const Context& ctx, const std::string& label, const std::string& h_spec) {
  const auto g = prepare_parent(label);
  const auto classes = classes_for(ctx, label, g);
  const auto h = resolve_subsystem(g, h_spec, classes);
  const auto w = isotropy_weights(g, h);
  if (w.dim_m == 0) throw EmptyWeights("h = g: the homogeneous space is a point");
  std::vector<SplittingCertificate> certs;
  if (w.eligible()) certs = find_splittings(w);
  std::vector<std::string> cases;
  int status = 0;
  for (const auto& c : certs) {
    try {
      cases.push_back(to_string(case_analysis(w, c).kind));
    } catch (const UnclassifiableTriple& e) {
      std::cerr << "invariant violation: " << e.what() << '\n';
      cases.emplace_back("unclassifiable");
      status = 2;
    }
  }
  if (ctx.fmt() == Format::json) {
    ojson doc;
    doc["g"] = label;
    doc["h"] = describe_subsystem(g, h, classes);
    doc["eligible"] = w.eligible();
    doc["certificates"] = ojson::array();
    for (std::size_t i = 0; i < certs.size(); ++i) {
      doc["certificates"].push_back(ojson::parse(certificate_json(certs[i], cases[i])));
    }
    print_json(doc);
    return status;
  }
  Rows rows{{"beta", "alphas", "case"}, {}};
  for (std::size_t i = 0; i < certs.size(); ++i) {
    std::string alphas;
    for (const auto& a : certs[i].alphas) alphas += (alphas.empty() ? "" : " ") + to_string(a);
    rows.rows.push_back({to_string(certs[i].beta), alphas, cases[i]});
  }
  rows.print(ctx.fmt(), std::cout);
  return status;
}

int cmd_wolf(const Context& ctx, const std::string& label) {
  const auto g = prepare_parent(label);
  const auto h = wolf_subsystem(g);
  const auto cert = wolf_certificate(g);
  const bool verified = verify_certificate(isotropy_weights(g, h), cert);
  if (ctx.fmt() == Format::json) {
    ojson doc;
    doc["g"] = label;
    doc["h_type"] = to_string(h.type);
    doc["torus_corank"] = h.torus_corank;
    doc["verified"] = verified;
    doc["certificate"] = ojson::parse(certificate_json(cert, "wolf"));
    print_json(doc);
  } else {
    Rows rows{{"g", "h_type", "n", "beta", "verified"}, {}};
    rows.rows.push_back({label, to_string(h.type), std::to_string(cert.n), to_string(cert.beta), yes_no(verified)});
    rows.print(ctx.fmt(), std::cout);
  }
  return verified ? 0 : 2;
}

int run(int argc, char** argv) {
  CLI::App app{"Almost quaternion-Hermitian structures on homogeneous spaces, at the root level"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--format", ctx.format, "Output format: json, table or csv")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--cache-dir", ctx.cache_dir, "Directory for cached subsystem enumerations");
  app.add_flag("--no-dedup", ctx.no_dedup, "Keep every closed subsystem instead of one per Weyl class");

  std::string g_label, h_spec, roots_json;
  auto* build_cmd = app.add_subcommand("build", "Print the roots of a catalog system");
  build_cmd->add_option("g", g_label, "Type label, e.g. B3 or A1+A1")->required();

  auto* validate_cmd = app.add_subcommand("validate", "Check the root system axioms");
  validate_cmd->add_option("g", g_label, "Type label");
  validate_cmd->add_option("--roots", roots_json, "Candidate roots as a JSON list");

  auto* subsystems_cmd = app.add_subcommand("subsystems", "Enumerate closed subsystems");
  subsystems_cmd->add_option("g", g_label, "Type label")->required();

  auto* weights_cmd = app.add_subcommand("weights", "Isotropy weights of g/h");
  weights_cmd->add_option("g", g_label, "Type label")->required();
  weights_cmd->add_option("subsystem", h_spec, "Subsystem selector")->required();

  auto* split_cmd = app.add_subcommand("split", "Search quaternionic splittings of the isotropy weights");
  split_cmd->add_option("g", g_label, "Type label")->required();
  split_cmd->add_option("subsystem", h_spec, "Subsystem selector")->required();

  auto* wolf_cmd = app.add_subcommand("wolf", "Wolf subsystem and its certificate");
  wolf_cmd->add_option("g", g_label, "Type label")->required();

  ClassifyOptions options;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one pair, or every pair up to a rank");
  classify_cmd->add_option("g", g_label, "Type label (pair mode)");
  classify_cmd->add_option("subsystem", h_spec, "Subsystem selector (pair mode)");
  auto* max_rank_opt = classify_cmd->add_option("--max-rank", options.max_rank, "Largest rank visited");
  classify_cmd->add_option("--series", options.series, "Series letters to keep, e.g. ABC");
  classify_cmd->add_flag("--include-products", options.include_products, "Also visit direct sums");
  classify_cmd->add_flag("--include-ineligible", options.include_ineligible,
                         "Report pairs whose dimension is not a multiple of 4");
  classify_cmd->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--timing", options.timing, "Include elapsed time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  try {
    if (*build_cmd) return cmd_build(ctx, g_label);
    if (*validate_cmd) return cmd_validate(ctx, g_label, roots_json);
    if (*subsystems_cmd) return cmd_subsystems(ctx, g_label);
    if (*weights_cmd) return cmd_weights(ctx, g_label, h_spec);
    if (*split_cmd) return cmd_split(ctx, g_label, h_spec);
    if (*wolf_cmd) return cmd_wolf(ctx, g_label);
    if (*classify_cmd) {
      if (!g_label.empty()) {
        if (h_spec.empty()) throw ParseError("pair mode needs both g and h");
        if (max_rank_opt->count() > 0) throw ParseError("--max-rank applies to batch mode only");
        const auto report = classify_pair(g_label, h_spec, ctx.cache());
        emit(report, ctx.fmt(), std::cout);
        for (const auto& v : report.violations) std::cerr << "invariant violation: " << v << '\n';
        return exit_code(report);
      }
      options.dedup = !ctx.no_dedup;
      const auto report = classify_all(options, ctx.cache());
      emit(report, ctx.fmt(), std::cout);
      for (const auto& p : report.pairs) {
        for (const auto& v : p.violations) std::cerr << "invariant violation (" << p.g_label << ", " << p.h_description << "): " << v << '\n';
      }
      return exit_code(report);
    }
  } catch (const std::invalid_argument& e) {
    // ParseError, NotClosed, EmptyWeights, LabelError, RankCapExceeded, ...
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
