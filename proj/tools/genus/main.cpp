// Command-line front end: genus distributions of small connected graphs by
// exhaustive rotation-system enumeration, plus polynomial analysis, catalog
// surveys, face tracing, and graph generation.
//
// Exit codes: 0 success (and --help), 2 parse/validation/I-O error, 3 budget
// refusal, 4 checkpoint mismatch, 1 internal or numeric-convergence failure.
// Stdout is byte-deterministic for fixed inputs and flags; progress goes to
// stderr and nothing is printed to stdout on a failing exit.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genus/analysis.hpp"
#include "genus/embedding.hpp"
#include "genus/errors.hpp"
#include "genus/graph.hpp"
#include "genus/graph6.hpp"
#include "genus/rotation.hpp"
#include "genus/survey.hpp"

namespace {

using namespace genus;

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// One graph input per command: exactly one of --g6 / --gp / --named.
struct GraphChoice {
  std::string g6;
  std::vector<std::int64_t> gp;
  std::string named;

  void add_flags(CLI::App* cmd) {
    auto* o1 = cmd->add_option("--g6", g6, "graph as a graph6 line");
    auto* o2 = cmd->add_option("--gp", gp, "generalized Petersen graph GP(n,k)")
                   ->expected(2)
                   ->type_name("N K");
    std::string names;
    for (const std::string& n : named_graph_names()) {
      if (!names.empty()) names += ", ";
      names += n;
    }
    auto* o3 = cmd->add_option("--named", named, "named catalog graph (" + names + ")");
    o1->excludes(o2)->excludes(o3);
    o2->excludes(o3);
  }

  bool provided() const { return !g6.empty() || !gp.empty() || !named.empty(); }

  Graph build() const {
    if (!g6.empty()) return parse_graph6(g6);
    if (!gp.empty()) {
      if (gp[0] < 3 || gp[1] < 1) throw validation_error("GP(n,k) needs n >= 3 and k >= 1");
      return generalized_petersen(static_cast<int>(gp[0]), static_cast<int>(gp[1]));
    }
    if (!named.empty()) return named_graph(named);
    throw validation_error("one of --g6, --gp, --named is required");
  }
};

struct EnumFlags {
  std::uint64_t budget = std::uint64_t(1) << 26;
  bool force = false;
  unsigned workers = 0;  // 0 = all hardware threads

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--budget", budget, "largest rotation count enumerated without --force-budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--force-budget", force, "enumerate past the budget");
    cmd->add_option("--workers", workers, "worker threads (default: all hardware threads)")
        ->check(CLI::Range(1u, 65536u));
  }

  EnumerationOptions options() const {
    EnumerationOptions eo;
    eo.budget = budget;
    eo.force = force;
    eo.workers = workers;
    auto start = std::chrono::steady_clock::now();
    eo.progress = [start](std::uint64_t done, std::uint64_t total) {
      if (total < (std::uint64_t(1) << 22)) return;
      if (done % (std::uint64_t(1) << 22) != 0 && done != total) return;
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      double rate = secs > 0 ? static_cast<double>(done) / secs / 1e6 : 0.0;
      std::fprintf(stderr, "progress: %" PRIu64 "/%" PRIu64 " rotations (%.1f M/s)\n", done,
                   total, rate);
    };
    return eo;
  }
};

std::vector<BigInt> parse_coeff_list(const std::string& text) {
  std::vector<BigInt> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t b = piece.find_first_not_of(" \t");
    std::size_t e = piece.find_last_not_of(" \t");
    if (b == std::string::npos) throw validation_error("empty coefficient in list");
    try {
      out.emplace_back(piece.substr(b, e - b + 1));
    } catch (const std::exception&) {
      throw validation_error("malformed coefficient '" + piece + "'");
    }
  }
  if (out.empty()) throw validation_error("empty coefficient list");
  return out;
}

std::string root_line(const ClassifiedRoot& cr) {
  std::string line = "root: " + fixed(cr.root.re, 11);
  if (!cr.root.is_real()) line += "+/-" + fixed(cr.root.im, 11) + "i";
  line += " (" + cone_class_name(cr.cone.cls);
  if (cr.cone.boundary) line += " boundary";
  line += ")";
  if (!cr.root.is_real()) line += " |Im|/sqrt3=" + fixed(cr.im_over_sqrt3, 11);
  if (cr.root.multiplicity > 1) line += " multiplicity=" + std::to_string(cr.root.multiplicity);
  return line;
}

std::string render_analysis(const AnalysisReport& rep) {
  std::ostringstream out;
  out << "polynomial: " << polynomial_display(rep.polynomial) << '\n';
  out << "coefficients: " << coefficient_list(rep.polynomial) << '\n';
  out << "log_concave: " << (rep.log_concave ? "true" : "false");
  if (!rep.log_concave) out << " (witness k=" << rep.lc_witness << ")";
  out << '\n';
  out << "internal_zeros: " << (rep.internal_zeros ? "true" : "false") << '\n';
  out << "real_rooted: " << (rep.real_rooted ? "true" : "false") << '\n';
  out << "distinct_real_roots: " << rep.real_root_count << '\n';
  for (const ClassifiedRoot& cr : rep.roots) out << root_line(cr) << '\n';
  for (auto [b, c] : rep.factorization.quadratics) {
    out << "quadratic: b=" << fixed(b, 12) << " c=" << fixed(c, 12)
        << " log_concave=" << (b >= 0 && b * b >= c ? "true" : "false") << '\n';
  }
  out << "cone_violations: " << rep.cone_violations.size() << '\n';
  out << "non_lc_quadratics: " << rep.non_lc_quadratics.size() << '\n';
  return out.str();
}

int cmd_genus(const GraphChoice& choice, const EnumFlags& flags) {
  Graph g = choice.build();
  GenusDistribution dist = genus_distribution(g, flags.options());
  Polynomial p = genus_polynomial(dist);
  std::string out = coefficient_list(p) + "\n" + polynomial_display(p) + "\n";
  std::fputs(out.c_str(), stdout);
  return 0;
}

int cmd_analyze(const GraphChoice& choice, const EnumFlags& flags, const std::string& coeffs,
                double tol) {
  if (!coeffs.empty() && choice.provided()) {
    throw validation_error("--coeffs cannot be combined with a graph");
  }
  Polynomial p;
  if (!coeffs.empty()) {
    p = Polynomial::from_coeffs(parse_coeff_list(coeffs));
  } else {
    p = genus_polynomial(genus_distribution(choice.build(), flags.options()));
  }
  RootOptions ro;
  ro.tol = tol;
  AnalysisReport rep = analyze(p, ro);
  std::fputs(render_analysis(rep).c_str(), stdout);
  return 0;
}

int cmd_faces(const GraphChoice& choice, std::uint64_t index) {
  Graph g = choice.build();
  RotationSystem rot = decode_rotation(g, index);
  FaceCollection fc = trace_faces(g, rot);
  std::ostringstream out;
  for (const auto& walk : fc.walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (i > 0) out << ' ';
      out << walk[i];
    }
    out << '\n';
  }
  // A dartless graph still embeds with one (spherical) face.
  int faces = g.edge_count() == 0 ? 1 : fc.face_count();
  out << "V=" << g.vertex_count() << " E=" << g.edge_count() << " F=" << faces
      << " genus=" << genus_of(g, rot) << '\n';
  std::fputs(out.str().c_str(), stdout);
  return 0;
}

int cmd_generate(const GraphChoice& choice) {
  Graph g = choice.build();
  std::fputs((write_graph6(g) + "\n").c_str(), stdout);
  return 0;
}

int cmd_survey(const std::string& catalog, const std::string& output, ReportFormat format,
               const EnumFlags& flags, double tol, bool no_strict,
               const std::optional<std::uint64_t>& stop_after,
               const std::optional<std::string>& checkpoint, bool resume) {
  SurveyOptions so;
  so.workers = flags.workers;
  so.strict = !no_strict;
  so.budget = flags.budget;
  so.force = flags.force;
  so.roots.tol = tol;
  so.stop_after = stop_after;
  auto start = std::chrono::steady_clock::now();
  so.progress = [start](std::uint64_t records, std::uint64_t lines) {
    if (records % 200 != 0) return;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double rate = secs > 0 ? static_cast<double>(records) / secs : 0.0;
    std::fprintf(stderr, "progress: %" PRIu64 " graphs, %" PRIu64 " lines (%.0f graphs/s)\n",
                 records, lines, rate);
  };

  FileSurveyResult res = run_survey_file(catalog, output, format, so, checkpoint, resume);
  for (const std::string& note : res.summary.skip_notes) {
    std::fprintf(stderr, "skipped %s\n", note.c_str());
  }
  if (res.summary.skipped > 0) {
    std::fprintf(stderr, "skipped %" PRId64 " catalog lines\n",
                 static_cast<std::int64_t>(res.summary.skipped));
  }
  std::fputs(format_summary(res.summary).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus distributions of small connected graphs by exhaustive "
               "enumeration of rotation systems"};
  app.require_subcommand(1);

  // genus
  auto* genus_cmd = app.add_subcommand("genus", "compute the genus distribution of one graph");
  GraphChoice genus_graph;
  genus_graph.add_flags(genus_cmd);
  EnumFlags genus_flags;
  genus_flags.add_flags(genus_cmd);

  // analyze
  auto* analyze_cmd =
      app.add_subcommand("analyze", "analyze a genus polynomial (from a graph or coefficients)");
  GraphChoice analyze_graph;
  analyze_graph.add_flags(analyze_cmd);
  EnumFlags analyze_flags;
  analyze_flags.add_flags(analyze_cmd);
  std::string coeffs;
  analyze_cmd->add_option("--coeffs", coeffs,
                          "comma-separated ascending integer coefficients, constant first");
  double analyze_tol = 1e-12;
  analyze_cmd->add_option("--tol", analyze_tol, "maximum accepted relative root residual")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // survey
  auto* survey_cmd =
      app.add_subcommand("survey", "analyze every graph6 line of a catalog file");
  std::string catalog_path;
  survey_cmd->add_option("catalog", catalog_path, "catalog file, one graph6 line per graph")
      ->required();
  std::string output_path;
  survey_cmd->add_option("--output", output_path, "report file to write")->required();
  ReportFormat survey_format = ReportFormat::kCsv;
  survey_cmd
      ->add_option("--format", survey_format, "report format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ReportFormat>{{"csv", ReportFormat::kCsv},
                                              {"json", ReportFormat::kJsonLines},
                                              {"jsonl", ReportFormat::kJsonLines}},
          CLI::ignore_case));
  EnumFlags survey_flags;
  survey_flags.add_flags(survey_cmd);
  double survey_tol = 1e-12;
  survey_cmd->add_option("--tol", survey_tol, "maximum accepted relative root residual")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bool no_strict = false;
  survey_cmd->add_flag("--no-strict", no_strict,
                       "skip bad catalog lines instead of aborting the survey");
  std::optional<std::uint64_t> stop_after;
  survey_cmd->add_option("--stop-after", stop_after, "stop after this many records");
  std::optional<std::string> checkpoint_path;
  survey_cmd->add_option("--checkpoint", checkpoint_path, "checkpoint file for resumable runs");
  bool resume = false;
  survey_cmd->add_flag("--resume", resume, "resume from the checkpoint");

  // faces
  auto* faces_cmd =
      app.add_subcommand("faces", "trace the facial walks of one rotation system");
  GraphChoice faces_graph;
  faces_graph.add_flags(faces_cmd);
  std::uint64_t rotation_index = 0;
  faces_cmd->add_option("--rotation", rotation_index, "rotation-system index")
      ->capture_default_str();

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "emit a graph as a graph6 line");
  GraphChoice generate_graph;
  generate_graph.add_flags(generate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(genus_cmd)) return cmd_genus(genus_graph, genus_flags);
    if (app.got_subcommand(analyze_cmd)) {
      return cmd_analyze(analyze_graph, analyze_flags, coeffs, analyze_tol);
    }
    if (app.got_subcommand(survey_cmd)) {
      return cmd_survey(catalog_path, output_path, survey_format, survey_flags, survey_tol,
                        no_strict, stop_after, checkpoint_path, resume);
    }
    if (app.got_subcommand(faces_cmd)) return cmd_faces(faces_graph, rotation_index);
    if (app.got_subcommand(generate_cmd)) return cmd_generate(generate_graph);
    std::fprintf(stderr, "error: no subcommand selected\n");
    return 2;
  } catch (const budget_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const checkpoint_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const validation_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const convergence_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
