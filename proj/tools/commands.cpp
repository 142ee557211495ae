#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "surfsing/blowup.hpp"
#include "surfsing/classify.hpp"
#include "surfsing/cover.hpp"
#include "surfsing/discrepancy.hpp"
#include "surfsing/document.hpp"
#include "surfsing/error.hpp"

namespace surfsing::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

GraphDocument load(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) return read_document_file(path_or_name);
  if (auto doc = find_builtin(path_or_name)) return *doc;
  throw UsageError("no such file or corpus graph: '" + path_or_name + "'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string cycle_string(const Cycle& z) {
  std::string out;
  for (std::size_t i = 0; i < z.ids.size(); ++i) {
    if (i) out += " + ";
    if (z.multiplicities[i] != 1) out += std::to_string(z.multiplicities[i]);
    out += z.ids[i];
  }
  return out;
}

// Plain left-aligned table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// --- analyze ------------------------------------------------------------------

int cmd_analyze(const std::string& input, bool as_json, std::ostream& out, std::ostream& err) {
  const GraphDocument doc = load(input);
  const ResolutionGraph& g = doc.graph;
  const ValidationReport report = validate(g);
  if (!report.is_negative_definite) {
    err << "analyze: " << doc.name << ": intersection matrix is not negative definite\n";
    return kRefused;
  }
  const DiscrepancyProfile profile = discrepancies(g);
  const PairClass cls = classify_pair(profile);
  std::vector<std::string> warnings;
  const Cycle z = fundamental_cycle(g, &warnings);
  const CycleNumbers nums = cycle_numbers(g, z);
  std::optional<Lemma2Result> lemma2;
  std::string lemma2_note;
  try {
    lemma2 = lemma2_check(g);
  } catch (const AnalysisRefusal& e) {
    lemma2_note = e.what();
  }
  const bool rational = nums.arithmetic_genus == Rational(0);

  if (as_json) {
    json j;
    j["name"] = doc.name;
    j["validation"] = {{"is_negative_definite", report.is_negative_definite},
                       {"is_tree", report.is_tree},
                       {"is_minimal", report.is_minimal},
                       {"messages", report.messages}};
    json coeffs = json::object();
    for (std::size_t i = 0; i < profile.size(); ++i) coeffs[profile.ids[i]] = profile.coefficients[i].str();
    j["coefficients"] = coeffs;
    j["index"] = to_string(profile.index);
    j["index_kind"] = profile.numerical_index_only ? "numerical" : "cartier";
    j["class"] = std::string(to_string(cls));
    json cyc = json::object();
    for (std::size_t i = 0; i < z.ids.size(); ++i) cyc[z.ids[i]] = z.multiplicities[i];
    j["fundamental_cycle"] = cyc;
    j["z_squared"] = nums.z_squared;
    j["z_dot_k"] = nums.z_dot_k;
    j["p_a"] = nums.arithmetic_genus.str();
    j["multiplicity"] = rational ? json(-nums.z_squared) : json(nullptr);
    if (lemma2) {
      j["lemma2"] = {{"applicable", true}, {"holds", lemma2->inequality_holds}};
    } else {
      j["lemma2"] = {{"applicable", false}, {"reason", lemma2_note}};
    }
    j["warnings"] = warnings;
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "graph " << doc.name << " (" << g.size() << " curves)\n";
  out << "negative definite: " << yes_no(report.is_negative_definite) << "   tree: " << yes_no(report.is_tree)
      << "   minimal: " << yes_no(report.is_minimal) << '\n';
  for (const auto& m : report.messages) out << "note: " << m << '\n';
  Table t({"curve", "C^2", "D'.C", "a", "Z"});
  for (std::size_t i = 0; i < g.size(); ++i) {
    t.add({g.id(i), std::to_string(g.self_int(i)), std::to_string(g.boundary(i)), profile.coefficients[i].str(),
           std::to_string(z.multiplicities[i])});
  }
  t.print(out);
  out << "index: " << to_string(profile.index)
      << (profile.numerical_index_only ? " (numerical index of E only; pair is not log terminal)" : "") << '\n';
  out << "class: " << to_string(cls) << '\n';
  out << "fundamental cycle: " << cycle_string(z) << '\n';
  out << "Z^2 = " << nums.z_squared << "   Z.K = " << nums.z_dot_k << "   p_a(Z) = " << nums.arithmetic_genus << '\n';
  if (rational) {
    out << "multiplicity -Z^2: " << -nums.z_squared << " (Artin: p_a(Z) = 0, rational)\n";
  }
  if (lemma2) {
    out << "Z^2 + Z.K < 0: " << (lemma2->inequality_holds ? "holds" : "FAILS") << '\n';
  } else {
    out << "Z^2 + Z.K < 0: not applicable (" << lemma2_note << ")\n";
  }
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return kOk;
}

// --- cover --------------------------------------------------------------------

std::string payload_string(const ComponentCase& c) {
  if (!c.payload) return "-";
  return (c.is_lower_bound() ? ">= " : "") + c.payload->str();
}

int cmd_cover(const std::string& input, std::int64_t p, bool as_json, std::ostream& out, std::ostream&) {
  if (!is_prime(p)) throw UsageError("--char " + std::to_string(p) + " is not a prime");
  const GraphDocument doc = load(input);
  const DiscrepancyProfile profile = discrepancies(doc.graph);
  const CoverReport report = cover_verdict(doc.graph, profile, p);
  const auto failing = report.failing_vertices();

  if (as_json) {
    json j;
    j["name"] = doc.name;
    j["p"] = p;
    j["index"] = to_string(report.index);
    j["verdict"] = std::string(to_string(report.verdict));
    j["provenance"] = std::string(to_string(report.provenance));
    j["index_after_step"] = to_string(report.step_index_after);
    j["remaining_inseparable_steps"] = report.remaining_inseparable_steps;
    j["boundary_reduced"] = report.boundary_reduced;
    json comps = json::array();
    for (const auto& row : report.components) {
      json c;
      c["id"] = row.id;
      c["residue"] = row.residue;
      c["case"] = std::string(to_string(row.component.kind));
      c["transformed"] = row.component.payload ? json(row.component.payload->str()) : json(nullptr);
      c["lower_bound"] = row.component.is_lower_bound();
      c["pullback_multiplicity"] =
          row.component.pullback_multiplicity ? json(*row.component.pullback_multiplicity) : json(nullptr);
      if (row.component.partner) c["partner"] = *row.component.partner;
      comps.push_back(std::move(c));
    }
    j["components"] = comps;
    j["failing"] = failing;
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "graph " << doc.name << ", characteristic " << p << ", index " << to_string(report.index) << '\n';
  if (report.components.empty()) {
    out << "p does not divide the index: the index 1 cover is etale off the singular point\n";
  } else {
    out << "residues m_j mod " << p << " from m_j = -r a_j:\n";
    Table t({"curve", "a", "m mod p", "case", "transformed a", "pull-back mult"});
    for (const auto& row : report.components) {
      const auto& c = row.component;
      t.add({row.id, profile.at(row.id).str(), std::to_string(row.residue), std::string(to_string(c.kind)),
             payload_string(c), c.pullback_multiplicity ? std::to_string(*c.pullback_multiplicity) : "?"});
    }
    t.print(out);
    out << "index after this step: " << to_string(report.step_index_after) << '\n';
    out << "boundary stays reduced: " << yes_no(report.boundary_reduced) << '\n';
  }
  out << "verdict: " << to_string(report.verdict) << '\n';
  out << "provenance: " << to_string(report.provenance);
  if (report.provenance == Provenance::TheoremBacked && report.remaining_inseparable_steps > 0) {
    out << " (" << report.remaining_inseparable_steps << " further degree-" << p << " step(s) not recomputed)";
  }
  out << '\n';
  if (!failing.empty()) {
    out << "failing vertex:";
    for (const auto& f : failing) out << ' ' << f;
    out << '\n';
  }
  return kOk;
}

// --- blowup -------------------------------------------------------------------

int cmd_blowup(const std::string& input, const std::string& at, const std::string& output, bool verify,
               std::ostream& out, std::ostream& err) {
  const GraphDocument doc = load(input);
  BlowUpCenter center;
  try {
    center = parse_center(at);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  try {
    check_center(doc.graph, center);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  const DiscrepancyProfile profile = discrepancies(doc.graph);
  const BlowUpResult result = blow_up(doc.graph, profile, center);
  const GraphDocument blown{doc.name + "+" + to_string(center), result.graph};

  std::ostringstream profile_text;
  profile_text << "# transported coefficients (index " << to_string(result.profile.index) << ")\n";
  for (std::size_t i = 0; i < result.profile.size(); ++i) {
    profile_text << "# a " << result.profile.ids[i] << " = " << result.profile.coefficients[i] << '\n';
  }
  if (output.empty()) {
    out << serialize_document(blown) << profile_text.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + output + "'");
    file << serialize_document(blown) << profile_text.str();
    out << "wrote " << output << '\n' << profile_text.str();
  }
  if (verify) {
    const bool ok = verify_transport(doc.graph, center);
    out << "# verify_transport: " << (ok ? "ok" : "MISMATCH") << '\n';
    if (!ok) {
      err << "blowup: transported coefficients differ from a direct solve\n";
      return kRefused;
    }
  }
  return kOk;
}

// --- classify -----------------------------------------------------------------

int cmd_classify(const std::string& input, bool as_json, std::ostream& out, std::ostream&) {
  const GraphDocument doc = load(input);
  const ShapeResult s = shape(doc.graph);
  const DynkinLabel label = dynkin_detect(doc.graph);
  if (as_json) {
    json j;
    j["name"] = doc.name;
    j["shape"] = std::string(to_string(s.shape));
    if (s.shape == ShapeKind::Fork) {
      j["center"] = *s.center;
      j["branches"] = s.branches;
      json dets = json::array();
      for (const auto& d : s.branch_determinants) dets.push_back(to_string(d));
      j["branch_determinants"] = dets;
    }
    j["lt_type"] = std::string(to_string(s.lt_type));
    j["dynkin"] = label.str();
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "graph " << doc.name << '\n';
  out << "shape: " << to_string(s.shape) << '\n';
  if (s.shape == ShapeKind::Fork) {
    out << "center: " << *s.center << '\n';
    for (std::size_t k = 0; k < 3; ++k) {
      out << "branch";
      for (const auto& id : s.branches[k]) out << ' ' << id;
      out << "  det " << to_string(s.branch_determinants[k]) << '\n';
    }
  }
  out << "log terminal type: " << to_string(s.lt_type) << '\n';
  out << "dynkin: " << label.str() << '\n';
  return kOk;
}

// --- enumerate ----------------------------------------------------------------

std::string weights_string(const ResolutionGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.self_int(i));
  }
  return out;
}

std::string edges_string(const ResolutionGraph& g) {
  std::string out;
  for (const auto& [i, j] : g.edges()) {
    if (!out.empty()) out += ",";
    out += std::to_string(i + 1) + "-" + std::to_string(j + 1);
  }
  return out.empty() ? "-" : out;
}

struct EnumerateOptions {
  int max_vertices = 0;
  int min_weight = -2;
  std::string filter;
  std::string check;
  std::int64_t char_min = 5;
  bool quiet = false;
};

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.max_vertices < 1) throw UsageError("--max-vertices must be >= 1");
  if (opt.min_weight > -2) throw UsageError("--min-weight must be <= -2");
  const bool check = opt.check == "dichotomy";

  std::size_t yielded = 0;
  std::size_t listed = 0;
  std::size_t checked_pairs = 0;
  std::size_t violations = 0;
  if (!opt.quiet) out << "#\tn\tweights\tedges\tindex\tclass\n";
  enumerate_graphs(opt.max_vertices, opt.min_weight, [&](const ResolutionGraph& g) {
    ++yielded;
    const DiscrepancyProfile profile = discrepancies(g);
    const PairClass cls = classify_pair(profile);
    const bool lt = cls != PairClass::NotLogTerminal;
    const bool keep = opt.filter.empty() || (opt.filter == "lt" && lt) ||
                      (opt.filter == "canonical" && cls == PairClass::Canonical);
    if (keep) {
      ++listed;
      if (!opt.quiet) {
        out << yielded << '\t' << g.size() << '\t' << weights_string(g) << '\t' << edges_string(g) << '\t'
            << to_string(profile.index) << '\t' << to_string(cls) << '\n';
      }
    }
    if (check && lt) {
      for (const auto p : prime_divisors(profile.index, opt.char_min)) {
        ++checked_pairs;
        const CoverReport report = cover_step(g, profile, p);
        std::string problem;
        for (const auto& row : report.components) {
          const auto& c = row.component;
          if (c.kind != CaseKind::Case1 && c.kind != CaseKind::Case2) {
            problem += " " + row.id + ":" + std::string(to_string(c.kind));
          } else if (*c.payload >= Rational(1)) {
            problem += " " + row.id + ":payload=" + c.payload->str();
          }
        }
        if (report.verdict != CoverVerdict::StepLogTerminal) {
          problem += " verdict=" + std::string(to_string(report.verdict));
        }
        if (report.step_index_after * BigInt(static_cast<long>(p)) != profile.index) problem += " bad-index";
        if (!problem.empty()) {
          ++violations;
          out << "VIOLATION\tp=" << p << '\t' << weights_string(g) << '\t' << edges_string(g) << '\t' << problem
              << '\n';
        }
      }
    }
    return true;
  });
  out << "# graphs: " << yielded << "  listed: " << listed;
  if (check) out << "  (graph, p) pairs checked: " << checked_pairs << "  violations: " << violations;
  out << '\n';
  if (violations > 0) {
    err << "enumerate: " << violations << " dichotomy violation(s)\n";
    return kRefused;
  }
  return kOk;
}

// --- corpus -------------------------------------------------------------------

int cmd_corpus(const std::string& export_dir, std::ostream& out) {
  for (const auto& doc : builtin_corpus()) {
    if (export_dir.empty()) {
      out << doc.name << '\n';
      continue;
    }
    const auto path = std::filesystem::path(export_dir) / (doc.name + ".graph");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path.string() + "'");
    file << serialize_document(doc);
    out << "wrote " << path.string() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of resolution dual graphs of surface singularities", "surfsing"};
  app.require_subcommand(1);

  std::string input;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "Discrepancies, index, class, fundamental cycle");
  analyze->add_option("file", input, "graph file or corpus name")->required();
  analyze->add_flag("--json", as_json, "machine-readable output");

  std::int64_t p = 0;
  auto* cover = app.add_subcommand("cover", "Index 1 cover analysis in characteristic p");
  cover->add_option("file", input, "graph file or corpus name")->required();
  cover->add_option("--char", p, "characteristic (a prime)")->required();
  cover->add_flag("--json", as_json, "machine-readable output");

  std::string at;
  std::string output;
  bool verify = false;
  auto* blowup = app.add_subcommand("blowup", "Blow up a point and transport the coefficients");
  blowup->add_option("file", input, "graph file or corpus name")->required();
  blowup->add_option("--at", at, "center: free:ID | edge:ID,ID | boundary:ID | boundary:-")->required();
  blowup->add_option("-o,--output", output, "write the blown-up graph here");
  blowup->add_flag("--verify", verify, "re-solve the blown-up graph and compare");

  auto* classify = app.add_subcommand("classify", "Shape, branch determinants and Dynkin label");
  classify->add_option("file", input, "graph file or corpus name")->required();
  classify->add_flag("--json", as_json, "machine-readable output");

  EnumerateOptions eopt;
  auto* enumerate = app.add_subcommand("enumerate", "Negative-definite weighted trees up to isomorphism");
  enumerate->add_option("--max-vertices", eopt.max_vertices, "largest tree size")->required();
  enumerate->add_option("--min-weight", eopt.min_weight, "most negative self-intersection")->required();
  enumerate->add_option("--filter", eopt.filter, "lt | canonical")->check(CLI::IsMember({"lt", "canonical"}));
  enumerate->add_option("--check", eopt.check, "property to verify")->check(CLI::IsMember({"dichotomy"}));
  enumerate->add_option("--char-min", eopt.char_min, "smallest characteristic for --check");
  enumerate->add_flag("--quiet", eopt.quiet, "print only the summary");

  std::string export_dir;
  auto* corpus = app.add_subcommand("corpus", "List or export the bundled graphs");
  corpus->add_option("--export", export_dir, "directory to write <name>.graph files into");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(input, as_json, out, err);
    if (*cover) return cmd_cover(input, p, as_json, out, err);
    if (*blowup) return cmd_blowup(input, at, output, verify, out, err);
    if (*classify) return cmd_classify(input, as_json, out, err);
    if (*enumerate) return cmd_enumerate(eopt, out, err);
    if (*corpus) return cmd_corpus(export_dir, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "invalid graph: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace surfsing::cli
